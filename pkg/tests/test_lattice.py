import pytest

from multikoszul.corpus import load
from multikoszul.lattice import (NotApplicable, Spaces, bidistributive, check2, checkI,
                                 crossed_inclusion_form, distributes_with, distributive,
                                 ec_distributive_form, extra_condition, extra_conditions,
                                 monomial_verdict, theorem5_verdict, theorem_inclusion, x_space)
from multikoszul.linalg import Subspace
from multikoszul.presentation import parse


def S(amb, *vecs):
    return Subspace(amb, list(vecs))


def test_distributive_examples():
    e = S(3, {0: 1, 1: 1}, {2: 1})
    assert distributive(e, [e])
    assert not distributive(S(2, {0: 1, 1: 1}), [S(2, {0: 1}), S(2, {1: 1})])
    assert distributive(Subspace.coordinate(4, [0, 1]),
                        [Subspace.coordinate(4, [1, 2]), Subspace.coordinate(4, [3])])


def test_bidistributive_reductions():
    e = S(2, {0: 1, 1: 1})
    fs = [S(2, {0: 1}), S(2, {1: 1})]
    zero = Subspace.zero(2)
    assert bidistributive(e, zero, fs, []) == distributive(e, fs) is False
    e2 = S(3, {2: 1})
    e1 = S(3, {0: 1})
    fs, gs = [S(3, {0: 1, 2: 1})], [S(3, {1: 1, 2: 1})]
    assert bidistributive(e1, e2, fs, gs) == bidistributive(e2, e1, gs, fs)


def test_low_degree_vacuous():
    p = load("x2_y3")
    sp = Spaces(p)
    assert x_space(sp, 2, 0, 3).dim == 0
    assert check2(p, 2)["ok"]


def test_extra_conditions():
    # a = 2: the first e.c. compares bar J_3 with itself
    for name in ("notcoprodcasi_1", "notcoprodcasi_2", "difkos", "x2_y3"):
        p = load(name)
        assert extra_condition(Spaces(p), 2, 1)["ok"]
    ec = extra_conditions(load("x2_y3"))
    assert ec["ok"] and ec[2]["ok"] and ec[3]["ok"]
    p = parse("gens x y z; rel x*x*y")
    assert extra_condition(Spaces(p), 3, 2)["ok"]


def test_ec_against_distributive_form():
    for name in ("notcoprodcasi_1", "notcoprodcasi_2", "difkos", "loco_B", "x2_y3"):
        p = load(name)
        assert extra_conditions(p)["ok"] == ec_distributive_form(p)


def test_check2(C1, x2y3):
    r = check2(C1, 10)
    assert not r["ok"] and r["n"] == 4 and r["clause"] == "(2,2)-bidistributivity"
    assert set(r["witness"]) == {(1, 1, 0, 2)}
    assert check2(x2y3, 10)["ok"]


def test_checkI_x2y3(x2y3):
    assert checkI(x2y3, 4, 10)["ok"]
    for i in (3, 4):
        n = None if i % 2 else 7
        assert theorem_inclusion(x2y3, i, n)["ok"]


def test_theorem5(C2, x2y3):
    v = theorem5_verdict(x2y3)
    assert v.multi_koszul and not v.exact
    assert v.details["odd_inclusion_reading"] == "(s, s') = (a, b)"
    v = theorem5_verdict(C2)
    assert not v.multi_koszul and v.details["clause"]


def test_monomial_verdict(C1, C2, x2y3):
    assert monomial_verdict(x2y3).multi_koszul and monomial_verdict(x2y3).exact
    for p in (C1, C2):
        v = monomial_verdict(p)
        assert not v.multi_koszul and v.exact
    with pytest.raises(NotApplicable):
        monomial_verdict(parse("gens x y; rel x*y - y*x; rel x*x*x"))
    with pytest.raises(NotApplicable):
        monomial_verdict(parse("gens x; rel x*x"))


def test_distributes_with():
    assert distributes_with(range(3), [Subspace.coordinate(3, [0]), Subspace.coordinate(3, [1, 2])])
    assert not distributes_with(range(2), [S(2, {0: 1, 1: 1})])


def test_crossed_inclusion_examples():
    e1, e2 = S(3, {0: 1}), S(3, {1: 1})
    fs, gs = [S(3, {0: 1, 2: 1})], [S(3, {1: 1})]
    assert bidistributive(e1, e2, fs, gs) == crossed_inclusion_form(e1, e2, fs, gs)
