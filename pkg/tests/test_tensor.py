import pytest

from multikoszul import tensor as ts
from multikoszul.tensor import TruncationTooDeep


def words(t):
    return sorted(w for v in t.word_vectors() for w in v)


def test_word_count():
    assert ts.word_count(3, 0) == 1
    assert ts.word_count(2, 3) == 8
    assert ts.word_count(3, 4) == 81


def test_word_index_roundtrip():
    for w in ts.all_words(3, 3):
        assert ts.index_word(ts.word_index(w, 3), 3, 3) == w


def test_cap_is_enforced():
    with pytest.raises(TruncationTooDeep) as exc:
        ts.full(4, 6, cap=1000)
    assert exc.value.n == 6


def test_embed_unit_and_zero():
    u = ts.from_word_vectors(2, 2, [{(0, 1): 1, (1, 0): 2}])
    assert ts.tensor_embed(u, ts.full(2, 0)) == u
    assert ts.tensor_embed(ts.zero(2, 1), u).dim == 0


def test_embed_single_product():
    # x=0, y=1, z=2
    xy = ts.from_word_vectors(3, 2, [{(0, 1): 1}])
    z = ts.from_word_vectors(3, 1, [{(2,): 1}])
    assert words(ts.tensor_embed(xy, z)) == [(0, 1, 2)]


def test_embed_matches_general_span():
    u = ts.from_word_vectors(2, 1, [{(0,): 1, (1,): 1}])
    w = ts.from_word_vectors(2, 1, [{(0,): 1, (1,): -1}])
    emb = ts.tensor_embed(u, w)
    direct = ts.from_word_vectors(2, 2, [{(0, 0): 1, (0, 1): -1, (1, 0): 1, (1, 1): -1}])
    assert emb == direct


def test_sandwich_examples():
    xz = ts.from_word_vectors(2, 2, [{(0, 1): 1}])
    assert ts.sandwich(0, xz, 0) == xz
    assert words(ts.sandwich(1, xz, 0)) == [(0, 0, 1), (1, 0, 1)]
    assert ts.sandwich(1, ts.zero(2, 2), 1).dim == 0
    assert ts.sandwich(-1, xz, 1).dim == 0


def test_reverse_space():
    t = ts.from_word_vectors(2, 3, [{(1, 1, 0): 1}])
    assert words(ts.reverse_space(t)) == [(0, 1, 1)]
    assert ts.reverse_space(ts.reverse_space(t)) == t
