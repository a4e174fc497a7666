from fractions import Fraction

import pytest

from hfdinv.exactmath import format_rational, gcd, parse_rational, squarefree


def test_rational_basics():
    assert Fraction(1, 4) + Fraction(-1, 4) == Fraction(0, 1)
    r = Fraction(121, 44)
    assert (r.numerator, r.denominator) == (11, 4)
    assert Fraction(-37, 22) < Fraction(10, 11)
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 0)


@pytest.mark.parametrize("n, expected", [(11, True), (121, False), (21, True), (1, True), (4, False), (2, True)])
def test_squarefree_examples(n, expected):
    assert squarefree(n) is expected


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        squarefree(0)


def test_squarefree_matches_sieve_up_to_a_million():
    N = 10**6
    oracle = bytearray([1]) * (N + 1)
    d = 2
    while d * d <= N:
        oracle[d * d::d * d] = bytes(len(range(d * d, N + 1, d * d)))
        d += 1
    bad = [n for n in range(1, N + 1) if squarefree(n) != bool(oracle[n])]
    assert bad == []


@pytest.mark.parametrize("a, b, g", [(31, 3, 1), (10, 5, 5), (0, 7, 7), (0, 0, 0)])
def test_gcd(a, b, g):
    assert gcd(a, b) == g


def test_format_and_parse():
    assert format_rational(Fraction(5, 2)) == "5/2"
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(3), always_fraction=True) == "3/1"
    assert format_rational(Fraction(-1, 4), always_fraction=True) == "-1/4"
    assert parse_rational(" 21/2 ") == Fraction(21, 2)
    assert parse_rational("-6/4") == Fraction(-3, 2)
    with pytest.raises(ValueError):
        parse_rational("1.5")
    with pytest.raises(ZeroDivisionError):
        parse_rational("3/0")
