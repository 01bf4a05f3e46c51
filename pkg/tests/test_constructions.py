"""Closed-form path and matching letterings."""

import pytest

from lettergraphs import (
    Decoder,
    decode,
    is_matching,
    is_path,
    matching_base_lettering,
    matching_canonical_lettering,
    matching_graph,
    path_lettericity,
    path_lettering,
    verify_lettering,
)


def test_path_lettericity_values():
    assert path_lettericity(3) == 2
    assert path_lettericity(7) == 3
    assert path_lettericity(10) == 4
    assert path_lettericity(200) == 68
    for n, expect in [(3, 2), (4, 2), (5, 3), (6, 3), (7, 3), (8, 4), (9, 4), (10, 4)]:
        assert path_lettericity(n) == expect


def test_path_lettericity_rejects_small_n():
    for n in (2, 1, 0, -5):
        with pytest.raises(ValueError):
            path_lettericity(n)


def test_path_lettering_words():
    assert path_lettering(3).word == (2, 2, 1)
    assert path_lettering(4).word == (2, 1, 2, 1)
    assert path_lettering(5).word == (2, 3, 2, 1, 2)
    assert path_lettering(6).word == (2, 3, 2, 1, 3, 2)
    assert path_lettering(7).word == (2, 1, 3, 2, 1, 3, 2)
    assert path_lettering(7).decoder == Decoder(3, frozenset({(2, 1), (3, 2)}))
    assert path_lettering(10).word == (2, 1, 3, 2, 1, 4, 3, 2, 4, 3)


def test_path_lettering_rejects_small_n():
    with pytest.raises(ValueError):
        path_lettering(2)


def test_path_lettering_decodes_to_path_with_predicted_alphabet():
    for n in range(3, 61):
        lt = path_lettering(n)
        g = decode(lt)
        assert g.n == n
        assert is_path(g) is not None
        assert lt.alphabet_size == path_lettericity(n)


def test_matching_base_lettering():
    lt = matching_base_lettering(2)
    assert lt.word == (2, 1, 3, 2)
    assert lt.decoder == Decoder(3, frozenset({(2, 1), (3, 2)}))
    assert decode(lt) == matching_graph(2)
    assert lt.alphabet_size == 3


def test_matching_canonical_lettering():
    lt = matching_canonical_lettering(3)
    assert lt.word == (1, 1, 2, 2, 3, 3)
    assert lt.decoder == Decoder(3, frozenset({(1, 1), (2, 2), (3, 3)}))
    assert decode(lt) == matching_graph(3)
    assert lt.alphabet_size == 3


def test_matching_letterings_sweep():
    for r in range(1, 26):
        base = matching_base_lettering(r)
        canon = matching_canonical_lettering(r)
        assert base.alphabet_size == r + 1
        assert canon.alphabet_size == r
        for lt in (base, canon):
            g = decode(lt)
            assert g == matching_graph(r)
            assert is_matching(g)
            assert verify_lettering(lt, matching_graph(r), tuple(range(1, 2 * r + 1)))


def test_matching_letterings_reject_bad_r():
    with pytest.raises(ValueError):
        matching_base_lettering(0)
    with pytest.raises(ValueError):
        matching_canonical_lettering(-1)
