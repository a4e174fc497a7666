"""L-space knot models built from a symmetrized Alexander polynomial.

Two sequences are derived from the Alexander coefficients ``c_k``:

* torsion coefficients ``t_i = sum_{j>0} j * c_{|i|+j}``;
* ``V_s = sum_{i >= s+1} b_i`` with ``b_i = sum_{k >= i} c_k`` the
  coefficients of ``t/(t-1) * Delta``; ``H_s = V_{-s}``.

Both are tabulated eagerly for ``0 <= s <= genus + 1`` when the model is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import LaurentPoly

__all__ = [
    "KnotModel",
    "ValidationError",
    "NotSymmetricError",
    "NormalizationError",
    "CoefficientError",
    "AlternationError",
    "LeadingCoefficientError",
    "pretzel",
    "from_polynomial",
    "torsion",
    "torsion_closed_form",
    "V",
    "H",
    "FAMILIES",
]


class ValidationError(ValueError):
    """Polynomial rejected as the Alexander polynomial of an L-space knot."""


class NotSymmetricError(ValidationError):
    pass


class NormalizationError(ValidationError):
    pass


class CoefficientError(ValidationError):
    pass


class AlternationError(ValidationError):
    pass


class LeadingCoefficientError(ValidationError):
    pass


@dataclass(frozen=True)
class KnotModel:
    label: str
    alexander: LaurentPoly
    genus: int
    _torsion: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _v: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = self.genus
        tors = tuple(
            sum(j * self.alexander.coefficient(i + j) for j in range(1, g - i + 1))
            for i in range(g + 2)
        )
        # V_s for s = g+1 down to 0; b_i vanishes above the genus
        v = [0] * (g + 2)
        for s in range(g - 1, -1, -1):
            v[s] = v[s + 1] + self.alexander.tail_sum(s + 1)
        object.__setattr__(self, "_torsion", tors)
        object.__setattr__(self, "_v", tuple(v))

    def torsion_sequence(self) -> tuple[int, ...]:
        """``t_0 .. t_genus``."""
        return self._torsion[: self.genus + 1]

    def v_sequence(self) -> tuple[int, ...]:
        """``V_0 .. V_genus``."""
        return self._v[: self.genus + 1]


def _validate(p: LaurentPoly) -> None:
    if not p:
        raise NormalizationError("zero polynomial")
    if not p.is_symmetric():
        raise NotSymmetricError(f"not symmetric under t -> 1/t: {p}")
    if p.eval_at_one() != 1:
        raise NormalizationError(f"Delta(1) = {p.eval_at_one()}, expected 1: {p}")
    bad = [c for c in p.terms.values() if c not in (1, -1)]
    if bad:
        raise CoefficientError(f"coefficients must be +-1, found {bad[0]}: {p}")
    if p.coefficient(p.degree_top) != 1:
        raise LeadingCoefficientError(f"leading coefficient must be +1: {p}")
    coeffs = list(p.terms.values())  # decreasing exponent order
    for a, b in zip(coeffs, coeffs[1:]):
        if a == b:
            raise AlternationError(f"nonzero coefficients must alternate in sign: {p}")


def from_polynomial(label: str, p: LaurentPoly | str) -> KnotModel:
    if isinstance(p, str):
        p = LaurentPoly.parse(p)
    _validate(p)
    return KnotModel(label=label, alexander=p, genus=p.degree_top)


def pretzel_alexander(q: int) -> LaurentPoly:
    """Symmetrized Alexander polynomial of the pretzel knot P(-2,3,2q+1)."""
    if q < 1:
        raise ValueError(f"pretzel family needs q >= 1, got {q}")
    terms: dict[int, int] = {0: (-1) ** (q - 1)}
    for j in range(1, q):
        c = (-1) ** (q - 1 - j)
        terms[j] = terms[-j] = c
    terms[q + 1] = terms[-q - 1] = -1
    terms[q + 2] = terms[-q - 2] = 1
    return LaurentPoly(terms)


def pretzel(q: int) -> KnotModel:
    return from_polynomial(f"P(-2,3,{2 * q + 1})", pretzel_alexander(q))


def torsion(K: KnotModel, i: int) -> int:
    i = abs(i)
    return K._torsion[i] if i <= K.genus + 1 else 0


FAMILIES = ("4k+3", "4k+1")


def torsion_closed_form(family: str, k: int, j: int) -> int:
    """Piecewise torsion coefficients of P(-2,3,4k+3) and P(-2,3,4k+1)."""
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    if k < 1 or j < 0:
        raise ValueError(f"need k >= 1 and j >= 0, got k={k}, j={j}")
    if family == "4k+3":
        if j <= 2 * k + 1:
            return k + 1 - j // 2
        return 1 if j == 2 * k + 2 else 0
    if j <= 2 * k:
        return k + 1 - (j + 1) // 2
    return 1 if j == 2 * k + 1 else 0


def V(K: KnotModel, s: int) -> int:
    if s > K.genus:
        return 0
    if s >= 0:
        return K._v[s]
    # V_s = V_0 + b_{s+1} + ... + b_0, and b_i = Delta(1) = 1 once i <= -genus
    g = K.genus
    near = sum(K.alexander.tail_sum(i) for i in range(max(s + 1, -g + 1), 1))
    return K._v[0] + near + max(0, -g - s)


def H(K: KnotModel, s: int) -> int:
    return V(K, -s)
