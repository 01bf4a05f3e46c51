"""Words, decoders, and the decoding map from words to graphs.

A word is a tuple of positive integer letters. A decoder over alphabet
{1..k} is a set of ordered letter pairs. Decoding a word w of length n
produces a graph on positions 1..n: positions i < j are adjacent exactly
when (w_i, w_j) is in the decoder. Pair order matters and always reads
(letter of the earlier position, letter of the later position).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CapabilityError, InvalidLetteringError, ParseError
from .graphs import Graph, are_isomorphic, is_matching, is_path

Word = tuple[int, ...]


@dataclass(frozen=True)
class Decoder:
    """Ordered letter pairs over {1..alphabet_size}."""

    alphabet_size: int
    pairs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.alphabet_size < 0:
            raise InvalidLetteringError(
                f"alphabet size must be >= 0, got {self.alphabet_size}"
            )
        pairs = frozenset((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for a, b in pairs:
            if not (1 <= a <= self.alphabet_size and 1 <= b <= self.alphabet_size):
                raise InvalidLetteringError(
                    f"decoder pair ({a},{b}) outside alphabet 1..{self.alphabet_size}"
                )

    @cached_property
    def _rows(self) -> tuple[int, ...]:
        # Dense k x k membership table, one bit-row per first component.
        rows = [0] * (self.alphabet_size + 1)
        for a, b in self.pairs:
            rows[a] |= 1 << b
        return tuple(rows)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs


@dataclass(frozen=True)
class Lettering:
    """A word together with a decoder whose alphabet covers it."""

    word: Word
    decoder: Decoder

    def __post_init__(self):
        w = tuple(int(a) for a in self.word)
        object.__setattr__(self, "word", w)
        k = self.decoder.alphabet_size
        for i, a in enumerate(w, start=1):
            if a < 1:
                raise InvalidLetteringError(f"letter at position {i} must be >= 1, got {a}")
            if a > k:
                raise InvalidLetteringError(
                    f"letter {a} at position {i} exceeds decoder alphabet 1..{k}"
                )

    @property
    def alphabet_size(self) -> int:
        """Distinct letters actually used; decoder letters absent from the
        word do not count toward the lettering's reported size."""
        return len(set(self.word))


def decode(lettering: Lettering) -> Graph:
    """Letter graph of the word: edge {i, j} for i < j iff (w_i, w_j) in D."""
    w = lettering.word
    n = len(w)
    k = lettering.decoder.alphabet_size
    pos = [0] * (k + 1)
    for i, a in enumerate(w):
        pos[a] |= 1 << i
    rows = lettering.decoder._rows
    succ = [0] * (k + 1)
    for a in range(1, k + 1):
        row = rows[a]
        m = 0
        while row:
            low = row & -row
            m |= pos[low.bit_length() - 1]
            row ^= low
        succ[a] = m
    edges = set()
    for i, a in enumerate(w):
        later = succ[a] >> (i + 1)
        while later:
            low = later & -later
            edges.add((i + 1, i + 1 + low.bit_length()))
            later ^= low
    return Graph(n, frozenset(edges))


def subword(word: Word, positions) -> Word:
    """Letters at the given positions (1-based), kept in position order."""
    w = tuple(word)
    ps = sorted(positions)
    for i in range(1, len(ps)):
        if ps[i] == ps[i - 1]:
            raise ValueError(f"duplicate position {ps[i]}")
    for p in ps:
        if not 1 <= p <= len(w):
            raise ValueError(f"position {p} outside 1..{len(w)}")
    return tuple(w[p - 1] for p in ps)


def letter_occurrences(lettering: Lettering, a: int) -> frozenset[int]:
    """Positions of letter a in the word (possibly empty)."""
    if not 1 <= a <= lettering.decoder.alphabet_size:
        raise InvalidLetteringError(
            f"letter {a} outside alphabet 1..{lettering.decoder.alphabet_size}"
        )
    return frozenset(i for i, b in enumerate(lettering.word, start=1) if b == a)


def complement_decoder(decoder: Decoder) -> Decoder:
    """All ordered pairs over the same alphabet that are not in the decoder."""
    k = decoder.alphabet_size
    pairs = frozenset(
        (a, b)
        for a in range(1, k + 1)
        for b in range(1, k + 1)
        if (a, b) not in decoder.pairs
    )
    return Decoder(k, pairs)


def verify_lettering(lettering: Lettering, target: Graph, mapping=None) -> bool:
    """Check that the lettering exhibits the target graph.

    With a mapping (sequence: position p -> vertex mapping[p-1]) the decoded
    graph must equal the target exactly under it. Without one, the decoded
    graph must be isomorphic to the target; beyond the small-graph
    isomorphism bound the target must be a path or a perfect matching.
    """
    n = len(lettering.word)
    if n != target.n:
        raise ValueError(f"word length {n} != vertex count {target.n}")
    decoded = decode(lettering)
    if mapping is not None:
        m = tuple(int(v) for v in mapping)
        if sorted(m) != list(range(1, n + 1)):
            raise ValueError("mapping must be a bijection onto vertices 1..n")
        relabelled = frozenset(
            (min(m[u - 1], m[v - 1]), max(m[u - 1], m[v - 1]))
            for u, v in decoded.edges
        )
        return relabelled == target.edges
    from .graphs import ISOMORPHISM_VERTEX_LIMIT

    if n <= ISOMORPHISM_VERTEX_LIMIT:
        return are_isomorphic(decoded, target)
    if is_path(target) is not None:
        return is_path(decoded) is not None
    if is_matching(target):
        return is_matching(decoded)
    raise CapabilityError(
        f"verification without a mapping is bounded at "
        f"{ISOMORPHISM_VERTEX_LIMIT} vertices unless the target is a path "
        f"or a perfect matching"
    )


# --- text format -----------------------------------------------------------
#
# Three lines:   k 3
#                w 2,1,3,2,1,3,2
#                D 2:1,3:2
#
# Empty word / decoder lines are written bare ("w", "D"). On input the word
# payload may also be a compact digit string (e.g. 2132132) when k <= 9.


def format_lettering(lettering: Lettering) -> str:
    w = ",".join(str(a) for a in lettering.word)
    d = ",".join(f"{a}:{b}" for a, b in sorted(lettering.decoder.pairs))
    return "\n".join(
        [
            f"k {lettering.decoder.alphabet_size}",
            f"w {w}" if w else "w",
            f"D {d}" if d else "D",
        ]
    )


def _line_payload(lines: list[str], line_no: int, tag: str) -> str:
    if line_no > len(lines):
        raise ParseError(f"missing '{tag}' line", line=line_no)
    ln = lines[line_no - 1]
    if ln.strip() == tag:
        return ""
    if not ln.startswith(tag + " "):
        raise ParseError(f"expected '{tag} ...'", line=line_no)
    return ln[len(tag) + 1 :].strip()


def parse_lettering(text: str) -> Lettering:
    """Inverse of format_lettering (round-trips exactly)."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) > 3:
        raise ParseError("unexpected extra line", line=4)
    kp = _line_payload(lines, 1, "k")
    try:
        k = int(kp)
    except ValueError:
        raise ParseError(f"alphabet size must be an integer, got {kp!r}", line=1) from None
    wp = _line_payload(lines, 2, "w")
    try:
        if not wp:
            word: Word = ()
        elif "," in wp:
            word = tuple(int(s) for s in wp.split(","))
        elif k <= 9 and wp.isdigit() and len(wp) >= 2:
            word = tuple(int(c) for c in wp)
        else:
            word = (int(wp),)
    except ValueError:
        raise ParseError(f"malformed word {wp!r}", line=2) from None
    dp = _line_payload(lines, 3, "D")
    pairs = set()
    if dp:
        for item in dp.split(","):
            a, sep, b = item.partition(":")
            if not sep:
                raise ParseError(f"decoder pair {item!r} must look like a:b", line=3)
            try:
                pairs.add((int(a), int(b)))
            except ValueError:
                raise ParseError(f"malformed decoder pair {item!r}", line=3) from None
    return Lettering(word, Decoder(k, frozenset(pairs)))


def parse_word(text: str) -> Word:
    """Word from CLI text: comma-separated letters, or a compact digit
    string (letters 1..9). A lone multi-digit token with no comma reads as
    compact digits; append a trailing comma to force the list reading."""
    s = text.strip()
    if not s:
        return ()
    if "," in s:
        parts = s.split(",")
        if parts and parts[-1] == "":
            parts.pop()
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"malformed word {text!r}") from None
    if s.isdigit() and len(s) >= 2:
        word = tuple(int(c) for c in s)
        if 0 in word:
            raise ParseError("compact digit words use letters 1..9, got 0")
        return word
    try:
        return (int(s),)
    except ValueError:
        raise ParseError(f"malformed word {text!r}") from None


def parse_decoder_pairs(text: str) -> frozenset[tuple[int, int]]:
    """Decoder pairs from CLI text of the form 'a:b,c:d' (empty allowed)."""
    s = text.strip()
    if not s:
        return frozenset()
    pairs = set()
    for item in s.split(","):
        a, sep, b = item.partition(":")
        if not sep:
            raise ParseError(f"decoder pair {item!r} must look like a:b")
        try:
            pairs.add((int(a), int(b)))
        except ValueError:
            raise ParseError(f"malformed decoder pair {item!r}") from None
    return frozenset(pairs)
