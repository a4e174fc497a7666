"""d-invariants of lens spaces and of positive surgeries on L-space knots.

Conventions
-----------
``L(g, h)`` is ``g/h`` surgery on the unknot. Lens-space and rational-surgery
spin^c structures are labelled ``0 .. g-1``; integral surgeries use the
labels ``-n/2 < i <= n/2``. The two labellings are not identified with each
other; only label-free statements (multisets, maxima, signs) compare them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactmath import format_rational, gcd, parse_rational
from .knots import KnotModel, V, torsion

__all__ = [
    "Slope",
    "DInvariantTable",
    "d_lens",
    "lens_table",
    "d_unknot_surgery",
    "d_integral",
    "integral_indices",
    "integral_table",
    "d_rational",
    "table",
    "is_lspace_slope",
]


@dataclass(frozen=True, order=False)
class Slope:
    """Positive surgery coefficient ``g/h`` in lowest terms."""

    g: int
    h: int = 1

    def __post_init__(self):
        if not (isinstance(self.g, int) and isinstance(self.h, int)):
            raise TypeError("slope parts must be integers")
        if self.g < 1 or self.h < 1:
            raise ValueError(f"only positive slopes are supported, got {self.g}/{self.h}")
        if gcd(self.g, self.h) != 1:
            raise ValueError(f"slope {self.g}/{self.h} is not in lowest terms")

    @classmethod
    def parse(cls, text: str) -> Slope:
        """``"g/h"`` or ``"n"``; non-reduced input such as ``"22/2"`` is reduced."""
        return cls.from_fraction(parse_rational(text))

    @classmethod
    def from_fraction(cls, r: Fraction) -> Slope:
        r = Fraction(r)
        if r <= 0:
            raise ValueError(f"only positive slopes are supported, got {format_rational(r)}")
        return cls(r.numerator, r.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.g, self.h)

    def text(self, *, always_fraction: bool = False) -> str:
        return format_rational(self.value, always_fraction=always_fraction)

    def __str__(self) -> str:
        return self.text()


def _check_lens(g: int, h: int) -> int:
    if g < 1:
        raise ValueError(f"lens space needs g >= 1, got {g}")
    if gcd(g, h) != 1:
        raise ValueError(f"L({g},{h}): gcd(g, h) must be 1")
    return h % g if g > 1 else 1


def d_lens(g: int, h: int, i: int) -> Fraction:
    """d(L(g,h), i) by the Euclidean recursion

        d(L(g,h), i) = ((2i+1-g-h)^2 - gh) / 4gh - d(L(h, g mod h), i mod h)

    with d(L(1, *), 0) = 0.
    """
    h = _check_lens(g, h)
    if not 0 <= i < g:
        raise ValueError(f"spin^c index {i} out of range 0..{g - 1} for L({g},{h})")
    total = Fraction(0)
    sign = 1
    while g > 1:
        total += sign * Fraction((2 * i + 1 - g - h) ** 2 - g * h, 4 * g * h)
        g, h, i = h, g % h, i % h
        sign = -sign
    return total


@lru_cache(maxsize=256)
def _lens_table(g: int, h: int) -> tuple[Fraction, ...]:
    if g == 1:
        return (Fraction(0),)
    inner = _lens_table(h, g % h)
    gh = g * h
    return tuple(
        Fraction((2 * i + 1 - g - h) ** 2 - gh, 4 * gh) - inner[i % h] for i in range(g)
    )


def lens_table(g: int, h: int) -> tuple[Fraction, ...]:
    """All of d(L(g,h), 0..g-1) at once, sharing the inner recursion."""
    return _lens_table(g, _check_lens(g, h))


def d_unknot_surgery(n: int, i: int) -> Fraction:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if 2 * abs(i) > n:
        raise ValueError(f"need |i| <= n/2, got i={i}, n={n}")
    return Fraction((n - 2 * abs(i)) ** 2, 4 * n) - Fraction(1, 4)


def integral_indices(n: int) -> range:
    """The ``n`` labels ``-n/2 < i <= n/2``."""
    return range(-((n - 1) // 2), n // 2 + 1)


def d_integral(K: KnotModel, n: int, i: int) -> Fraction:
    """d(K_n, i) = d(U_n, i) - 2 t_i(K)."""
    if n < 1:
        raise ValueError(f"only positive integral slopes are supported, got {n}")
    if not (-n < 2 * i <= n):
        raise ValueError(f"label {i} outside -n/2 < i <= n/2 for n={n}")
    return d_unknot_surgery(n, i) - 2 * torsion(K, i)


def d_rational(K: KnotModel, slope: Slope, i: int) -> Fraction:
    """d(K_{g/h}, i) = d(L(g,h), i) - 2 max(V_{floor(i/h)}, V_{-floor((i-g)/h)})."""
    g, h = slope.g, slope.h
    if not 0 <= i < g:
        raise ValueError(f"spin^c index {i} out of range 0..{g - 1}")
    return lens_table(g, h)[i] - 2 * _vmax(K, g, h, i)


def _vmax(K: KnotModel, g: int, h: int, i: int) -> int:
    return max(V(K, i // h), V(K, -((i - g) // h)))


@dataclass(frozen=True)
class DInvariantTable:
    knot_label: str
    slope: Slope
    entries: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        if [i for i, _ in self.entries] != list(range(self.slope.g)):
            raise ValueError("table must hold exactly one entry per index 0..g-1")

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(d for _, d in self.entries)

    @property
    def max_d(self) -> Fraction:
        return max(self.values)

    @property
    def max4d(self) -> Fraction:
        return 4 * self.max_d

    def csv_rows(self) -> list[list[str]]:
        return [[str(i), str(d.numerator), str(d.denominator)] for i, d in self.entries]

    def to_dict(self) -> dict:
        return {
            "knot": self.knot_label,
            "slope": self.slope.text(always_fraction=True),
            "entries": [
                {"index": i, "d": format_rational(d, always_fraction=True)}
                for i, d in self.entries
            ],
            "max_d": format_rational(self.max_d, always_fraction=True),
            "max4d": format_rational(self.max4d, always_fraction=True),
        }


def table(K: KnotModel, slope: Slope) -> DInvariantTable:
    g, h = slope.g, slope.h
    lens = lens_table(g, h)
    entries = tuple((i, lens[i] - 2 * _vmax(K, g, h, i)) for i in range(g))
    return DInvariantTable(K.label, slope, entries)


def integral_table(K: KnotModel, n: int) -> tuple[tuple[int, Fraction], ...]:
    """(label, d) over the integral labels, in increasing label order."""
    return tuple((i, d_integral(K, n, i)) for i in integral_indices(n))


def is_lspace_slope(K: KnotModel, slope: Slope) -> bool:
    """Positive surgery on an L-space knot is an L-space once the slope is >= 2g-1."""
    return slope.value >= 2 * K.genus - 1
