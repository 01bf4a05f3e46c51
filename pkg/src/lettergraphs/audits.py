"""Enumeration audits of structural facts about letter graphs.

Three executable checks back the path lower bound at desk scale:

* betweenness: in any decoded graph, a vertex adjacent to exactly one of
  two same-letter positions must sit strictly between them in the word;
* in every lettering of a perfect matching, no letter occurs three times;
* with the minimum alphabet (k = r for rK_2), each letter's two positions
  always form one matched edge, which forces (a, a) into the decoder.

The word census is an independent brute force (it never calls the solver):
it counts words admitting a matching lettering under both alphabet
conventions, fixed {1..r} and first-occurrence canonical.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .core import Lettering, decode
from .errors import CapabilityError
from .graphs import matching_graph
from .solver import enumerate_letterings

# Census and audit enumerate everything; kept small by contract.
AUDIT_MAX_PAIRS = 3


def check_betweenness(lettering: Lettering) -> list[tuple[int, int, int]]:
    """Violations (i, j, k): positions i < k share a letter, j is adjacent
    to exactly one of them, yet j does not lie strictly between them.
    Always empty; decoded graphs cannot distinguish twin positions from
    outside the gap."""
    g = decode(lettering)
    w = lettering.word
    n = len(w)
    adj = g.adjacency_masks()
    by_letter: dict[int, list[int]] = {}
    for i, a in enumerate(w, start=1):
        by_letter.setdefault(a, []).append(i)
    out = []
    for a in sorted(by_letter):
        ps = by_letter[a]
        for x in range(len(ps)):
            for y in range(x + 1, len(ps)):
                i, k = ps[x], ps[y]
                for j in range(1, n + 1):
                    if j == i or j == k:
                        continue
                    if (adj[i] >> j & 1) != (adj[k] >> j & 1) and not i < j < k:
                        out.append((i, j, k))
    return out


@dataclass(frozen=True)
class MatchingAuditReport:
    """Summary over all letterings of rK_2 with alphabet exactly k."""

    r: int
    k: int
    witness_count: int
    max_letter_occurrences: int
    edge_paired_fraction: float

    def ok(self) -> bool:
        if self.max_letter_occurrences > 2:
            return False
        return self.k != self.r or self.edge_paired_fraction == 1.0


def audit_matching_letterings(r: int, k: int) -> MatchingAuditReport:
    """Enumerate every lettering of rK_2 with alphabet exactly k and
    summarize letter multiplicities and edge pairing."""
    if not 1 <= r <= AUDIT_MAX_PAIRS:
        raise CapabilityError(
            f"matching audits are enumeration-bounded at r <= {AUDIT_MAX_PAIRS}, got {r}"
        )
    if k < r:
        raise ValueError(f"an r-edge matching needs at least r letters, got k={k}")
    if k > 2 * r:
        raise ValueError(f"k cannot exceed the vertex count {2 * r}, got {k}")
    result = enumerate_letterings(matching_graph(r), k)
    max_occ = 0
    paired = 0
    for witness in result.witnesses:
        word = witness.lettering.word
        counts = Counter(word)
        max_occ = max(max_occ, max(counts.values()))
        decoded = decode(witness.lettering)
        positions: dict[int, list[int]] = {}
        for p, a in enumerate(word, start=1):
            positions.setdefault(a, []).append(p)
        if all(
            len(ps) == 2 and decoded.has_edge(ps[0], ps[1])
            for ps in positions.values()
        ):
            paired += 1
    count = len(result.witnesses)
    fraction = paired / count if count else 1.0
    return MatchingAuditReport(r, k, count, max_occ, fraction)


@dataclass(frozen=True)
class WordCensus:
    """Words of length 2r admitting a lettering of rK_2, counted under both
    alphabet conventions."""

    r: int
    fixed_alphabet_count: int  # words over the fixed alphabet {1..r}
    canonical_count: int  # first-occurrence canonical words only


def _perfect_matchings(vertices: tuple[int, ...]):
    if not vertices:
        yield ()
        return
    a, rest = vertices[0], vertices[1:]
    for i, b in enumerate(rest):
        for sub in _perfect_matchings(rest[:i] + rest[i + 1 :]):
            yield ((a, b),) + sub


def _admits_matching(word: tuple[int, ...], matchings) -> bool:
    # Dumb on purpose: try every perfect matching of the positions as the
    # would-be edge set and look for a consistent decoder.
    n = len(word)
    for m in matchings:
        edges = set(m)
        table: dict[tuple[int, int], bool] = {}
        ok = True
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                bit = (i, j) in edges
                key = (word[i - 1], word[j - 1])
                prev = table.get(key)
                if prev is None:
                    table[key] = bit
                elif prev != bit:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def _is_canonical(word: tuple[int, ...]) -> bool:
    seen = 0
    for a in word:
        if a == seen + 1:
            seen += 1
        elif a > seen:
            return False
    return True


def matching_word_census(r: int) -> WordCensus:
    """Brute-force count of words of length 2r over {1..r} that decode to a
    perfect matching for some decoder. Independent of the solver."""
    if not 1 <= r <= AUDIT_MAX_PAIRS:
        raise CapabilityError(
            f"word census is enumeration-bounded at r <= {AUDIT_MAX_PAIRS}, got {r}"
        )
    matchings = list(_perfect_matchings(tuple(range(1, 2 * r + 1))))
    fixed = 0
    canonical = 0
    for word in product(range(1, r + 1), repeat=2 * r):
        if _admits_matching(word, matchings):
            fixed += 1
            if _is_canonical(word):
                canonical += 1
    return WordCensus(r, fixed, canonical)


def count_matching_words(r: int) -> int:
    """Number of words over the fixed alphabet {1..r} admitting a lettering
    of rK_2; equals (2r)!/2^r (choose which positions pair up)."""
    return matching_word_census(r).fixed_alphabet_count
