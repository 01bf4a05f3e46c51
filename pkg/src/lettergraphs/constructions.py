"""Closed-form letterings for paths and perfect matchings.

Paths admit letterings with floor((n+4)/3) letters and no fewer; the word
built here realizes that alphabet size for every n >= 3 and is re-decoded
and path-checked before being returned, so a successful call is its own
certificate.
"""

from __future__ import annotations

from .core import Decoder, Lettering, decode
from .graphs import is_path


def path_lettericity(n: int) -> int:
    """Minimum alphabet size for P_n, n >= 3: floor((n+4)/3)."""
    if n < 3:
        raise ValueError(
            f"closed form covers n >= 3, got {n}; P_1 and P_2 both have "
            f"single-letter letterings"
        )
    return (n + 4) // 3


def path_lettering(n: int) -> Lettering:
    """Optimal lettering of P_n for n >= 3.

    Base word on 3r+1 positions, r = ceil((n-1)/3), over letters 1..r+1:

        2 1 | 3 2 1 | 4 3 2 | ... | (r+1) r (r-1) | (r+1) r

    with decoder {(j+1, j) : 1 <= j <= r}. For n = 3r the first occurrence
    of letter 1 is dropped; for n = 3r-1 the last occurrence of letter r+1
    is dropped as well.
    """
    if n < 3:
        raise ValueError(
            f"path letterings are constructed for n >= 3, got {n}; P_1 and "
            f"P_2 are single-letter: words (1) and (1,1)"
        )
    r = (n + 1) // 3
    word = [2, 1]
    for j in range(2, r + 1):
        word.extend((j + 1, j, j - 1))
    word.extend((r + 1, r))
    if n <= 3 * r:
        word.remove(1)  # drops the first occurrence
    if n == 3 * r - 1:
        # drop the last occurrence of r+1
        idx = len(word) - 1 - word[::-1].index(r + 1)
        del word[idx]
    decoder = Decoder(r + 1, frozenset((j + 1, j) for j in range(1, r + 1)))
    lettering = Lettering(tuple(word), decoder)
    g = decode(lettering)
    if g.n != n or is_path(g) is None:
        raise RuntimeError(f"internal error: constructed word for n={n} is not a path")
    return lettering


def matching_base_lettering(r: int) -> Lettering:
    """Lettering of rK_2 on r+1 letters: word 21 32 43 ... (r+1)r with
    decoder {(j+1, j)}; block j decodes to the edge {2j-1, 2j}."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    word = []
    for j in range(1, r + 1):
        word.extend((j + 1, j))
    decoder = Decoder(r + 1, frozenset((j + 1, j) for j in range(1, r + 1)))
    return Lettering(tuple(word), decoder)


def matching_canonical_lettering(r: int) -> Lettering:
    """Optimal lettering of rK_2 on r letters: word 1 1 2 2 ... r r with
    decoder {(a, a)}; each letter's two positions form one edge."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    word = []
    for a in range(1, r + 1):
        word.extend((a, a))
    decoder = Decoder(r, frozenset((a, a) for a in range(1, r + 1)))
    return Lettering(tuple(word), decoder)
