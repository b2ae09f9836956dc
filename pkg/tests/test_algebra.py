from oracles import hilbert_by_words

from multikoszul.algebra import GradedAlgebra, algebra_dims
from multikoszul.corpus import load, monomial_corpus
from multikoszul.presentation import ideal_component, parse


def test_small_dims():
    assert algebra_dims(parse("gens x; rel x*x"), 4) == [1, 1, 0, 0, 0]
    assert algebra_dims(parse("gens x y"), 5) == [1, 2, 4, 8, 16, 32]


def test_x2_y3_dims_against_word_filter():
    p = load("x2_y3")
    assert algebra_dims(p, 6) == [1, 2, 3, 4, 5, 7, 9]
    assert algebra_dims(p, 9) == hilbert_by_words(2, [(0, 0), (1, 1, 1)], 9)


def test_dims_complement_of_ideal():
    # a non-monomial algebra: dim A_n = d^n - dim I_n
    p = parse("gens x y z; rel x*y - y*x; rel x*z*z + z*z*y")
    dims = algebra_dims(p, 5)
    assert dims == [3 ** n - ideal_component(p, n).dim for n in range(6)]


def test_monomial_corpus_dims():
    for p in monomial_corpus(11, 15):
        obs = [w for s in p.degrees for v in p.rel(s).word_vectors() for w in v]
        assert algebra_dims(p, 7) == hilbert_by_words(p.d, obs, 7)


def test_left_action_examples():
    p = parse("gens x y; rel x*y; rel y*y*x")
    alg = GradedAlgebra(p, 4)
    # generator acting on the unit
    for g in range(2):
        assert alg.left_action(g, 0)[0] == {alg.index[1][(g,)]: 1}
    # x . class(y) = class(xy) = 0
    assert alg.left_action(0, 1)[alg.index[1][(1,)]] == {}
    q = GradedAlgebra(parse("gens x; rel x*x"), 3)
    assert q.left_action(0, 1)[0] == {}


def test_mul_is_associative_on_basis():
    p = parse("gens x y; rel x*y - 2*y*x; rel y*y*y + x*x*y")
    alg = GradedAlgebra(p, 6)
    for a in range(alg.dim(2)):
        for b in range(alg.dim(1)):
            for c in range(alg.dim(2)):
                ab = alg.mul({a: 1}, 2, {b: 1}, 1)
                bc = alg.mul({b: 1}, 1, {c: 1}, 2)
                assert alg.mul(ab, 3, {c: 1}, 2) == alg.mul({a: 1}, 2, bc, 3)


def test_normal_form_kills_relations():
    p = parse("gens x y; rel x*y - y*x")
    alg = GradedAlgebra(p, 3)
    xy = alg.normal_form((0, 1))
    yx = alg.normal_form((1, 0))
    assert xy == yx and alg.dim(2) == 3
