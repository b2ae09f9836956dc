import pytest

from multikoszul.linalg import Field, LinalgError
from multikoszul.presentation import (ParseError, check_minimality, free_product, from_polys,
                                      from_words, ideal_component, lower_ideal, normalize,
                                      opposite, parse, single_degree)


def words(t):
    return sorted(w for v in t.word_vectors() for w in v)


def test_parse_example_C():
    p = parse("field Q; gens x y z; rel x*z; rel y*y*x")
    assert p.degrees == [2, 3]
    assert p.rel(2).dim == 1 and p.rel(3).dim == 1
    assert p.generators == ["x", "y", "z"]


def test_parse_single_relation():
    p = parse("field Q; gens x; rel x*x")
    assert p.degrees == [2] and p.rel(2).dim == 1


def test_parse_multiline_comments_and_coefficients():
    text = """
    # a quadratic algebra
    field GF(5)
    gens x y
    rel 2*x*y - 1/2*y*x   # coefficient in GF(5)
    """
    p = parse(text)
    assert p.field == Field(5)
    assert p.rel(2).dim == 1


@pytest.mark.parametrize("text, needle, line", [
    ("gens x y; rel x*y - y*x + x", "non-homogeneous", 1),
    ("gens x y\nrel x*q", "unknown generator", 2),
    ("gens x\nrel x", "degree 1", 2),
    ("gens x\nrel 1/0*x*x", "coefficient", 2),
    ("field R\ngens x", "field", 1),
    ("gens x\nfrobnicate", "unknown statement", 2),
])
def test_parse_errors(text, needle, line):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert needle in exc.value.message
    assert exc.value.line == line


def test_parse_error_column():
    with pytest.raises(ParseError) as exc:
        parse("gens x y\nrel x*y + x*w")
    assert exc.value.line == 2 and exc.value.column > 1


def test_minimality():
    C = parse("gens x y z; rel x*z; rel y*y*x")
    assert check_minimality(C) == (True, None)
    raw = from_words(["x"], ["xx", "xxx"], normalize_relations=False)
    ok, (s, w) = check_minimality(raw)
    assert not ok and s == 3 and set(w) == {(0, 0, 0)}
    assert check_minimality(parse("gens x y"))[0]


def test_normalize():
    C = parse("gens x y z; rel x*z; rel y*y*x")
    assert normalize(C).relations == C.relations
    p = from_words(["x"], ["xx", "xxx"], normalize_relations=False)
    q = normalize(p)
    assert q.degrees == [2] and q.warnings
    # x*y*y + y*x*y lies entirely in V.R_2 + R_2.V when R_2 = <xy>, so nothing survives
    p = parse("gens x y; rel x*y; rel x*y*y + y*x*y")
    assert p.degrees == [2] and p.warnings


def test_normalize_keeps_new_part():
    p = parse("gens x y; rel x*y; rel x*y*y + y*y*y")
    assert p.degrees == [2, 3] and not p.warnings
    assert p.rel(3).word_vectors() == [{(0, 1, 1): 1, (1, 1, 1): 1}]


def test_lower_ideal_and_ideal_component():
    p = parse("gens x; rel x*x*x")
    assert lower_ideal(p, 3).dim == 0
    q = parse("gens x; rel x*x")
    assert ideal_component(q, 1).dim == 0
    assert words(ideal_component(q, 3)) == [(0, 0, 0)]
    r = parse("gens x z; rel x*z")
    assert words(ideal_component(r, 3)) == sorted([(0, 0, 1), (1, 0, 1), (0, 1, 0), (0, 1, 1)])


def test_opposite():
    assert opposite(parse("gens x; rel x*x")).relations == parse("gens x; rel x*x").relations
    assert words(opposite(parse("gens x z; rel x*z")).rel(2)) == [(1, 0)]
    assert words(opposite(parse("gens x y; rel y*y*x")).rel(3)) == [(0, 1, 1)]


def test_free_product():
    a = parse("gens x; rel x*x")
    b = parse("gens y; rel y*y*y")
    fp = free_product(a, b)
    assert fp.generators == ["x", "y"] and fp.degrees == [2, 3]
    assert fp.relations == parse("gens x y; rel x*x; rel y*y*y").relations
    empty = from_polys([], [])
    assert free_product(a, empty).relations == a.relations
    c = free_product(parse("gens x z; rel x*z"), parse("gens u; rel u*u*u*u"))
    assert c.generators == ["x", "z", "u"] and c.degrees == [2, 4]


def test_free_product_renames_and_field_check():
    fp = free_product(parse("gens x; rel x*x"), parse("gens x; rel x*x*x"))
    assert fp.generators == ["x", "x1"]
    with pytest.raises(LinalgError):
        free_product(parse("gens x"), parse("field GF(3); gens y"))


def test_text_roundtrip():
    p = parse("gens x y; rel 2*x*y - 3*y*x; rel y*y*y")
    assert parse(p.to_text()).relations == p.relations
    assert single_degree(p, 3).degrees == [3]
