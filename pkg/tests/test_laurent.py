import pytest
from hypothesis import given, strategies as st

from hfdinv.laurent import LaurentPoly, ParseError

P237 = "t^5 - t^4 + t^2 - t + 1 - t^-1 + t^-2 - t^-4 + t^-5"

polys = st.dictionaries(st.integers(-30, 30), st.integers(-50, 50), max_size=12).map(LaurentPoly)


def test_parse_pretzel_polynomial():
    p = LaurentPoly.parse(P237)
    assert dict(p.terms) == {5: 1, 4: -1, 2: 1, 1: -1, 0: 1, -1: -1, -2: 1, -4: -1, -5: 1}
    assert str(p) == P237
    assert (p.degree_top, p.degree_bottom) == (5, -5)


def test_parse_constant_and_cancellation():
    assert dict(LaurentPoly.parse("1").terms) == {0: 1}
    assert dict(LaurentPoly.parse("t^2 - t^2 + 3").terms) == {0: 3}
    assert not LaurentPoly.parse("t - t")
    assert str(LaurentPoly.parse("t - t")) == "0"


@pytest.mark.parametrize("text, terms", [
    ("2*t^3 - 3t^-2", {3: 2, -2: -3}),
    ("-t", {1: -1}),
    ("+ 4", {0: 4}),
    ("t^{-3} + t^(2)", {-3: 1, 2: 1}),
    ("  t ^ - 1  +t^+1 ", {-1: 1, 1: 1}),
    ("t + t + t", {1: 3}),
])
def test_grammar_variants(text, terms):
    assert dict(LaurentPoly.parse(text).terms) == terms


@pytest.mark.parametrize("text, pos", [
    ("t^", 2),
    ("t +", 3),
    ("3 x", 2),
    ("t^{2", 4),
    ("", 0),
    ("t t", 2),
    ("2*", 2),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        LaurentPoly.parse(text)
    assert info.value.pos == pos


def test_eval_at_one():
    assert LaurentPoly.parse(P237).eval_at_one() == 1
    assert LaurentPoly.parse("1").eval_at_one() == 1
    assert LaurentPoly.parse("t - 1").eval_at_one() == 0


def test_is_symmetric():
    p239 = "t^6 - t^5 + t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3 - t^-5 + t^-6"
    assert LaurentPoly.parse(p239).is_symmetric()
    assert not LaurentPoly.parse("t - 1").is_symmetric()
    assert LaurentPoly.parse("1").is_symmetric()


def test_tail_sums():
    p = LaurentPoly.parse(P237)
    assert p.tail_sum(5) == 1
    assert p.tail_sum(2) == 1  # c_2 + c_3 + c_4 + c_5 = 1 + 0 - 1 + 1
    assert p.tail_sum(6) == 0
    assert p.tail_sum(-5) == p.tail_sum(-100) == 1


@given(polys, st.integers(-40, 40))
def test_tail_sum_telescopes(p, i):
    assert p.tail_sum(i) - p.tail_sum(i + 1) == p.coefficient(i)


@given(polys)
def test_tail_sum_limits(p):
    if p:
        assert p.tail_sum(p.degree_top + 1) == 0
        assert p.tail_sum(p.degree_bottom) == p.eval_at_one()


@given(polys)
def test_print_parse_roundtrip(p):
    assert LaurentPoly.parse(str(p)) == p


def test_no_zero_coefficients_stored():
    p = LaurentPoly({1: 0, 2: 3, -1: 0})
    assert dict(p.terms) == {2: 3}
