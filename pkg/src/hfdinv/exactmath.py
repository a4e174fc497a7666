"""Exact rational arithmetic and the bit of number theory the rest needs.

``Rational`` is :class:`fractions.Fraction`: arbitrary-precision, always
reduced, denominator positive. Nothing in this package touches floats.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def squarefree(n: int) -> bool:
    """True iff no prime square divides ``n``.

    Trial division; fine for the desk-scale orders (< 10**6) scanned here.
    """
    if n < 1:
        raise ValueError(f"squarefree needs n >= 1, got {n}")
    if n % 4 == 0:
        return False
    if n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
        p += 2
    return True


def format_rational(x: Fraction, *, always_fraction: bool = False) -> str:
    """Render as ``num/den``; integers drop the ``/1`` unless asked not to."""
    x = Fraction(x)
    if x.denominator == 1 and not always_fraction:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"n"`` or ``"n/d"`` with integer parts only (no decimals)."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(n, d)
