"""Owens-Strle negative-definite test and the resulting non-fillability verdict.

The argument encoded by :func:`obstruct`:

1. If ``Y = K_{g/h}`` is an L-space, Ozsvath-Szabo show any weak symplectic
   semi-filling of ``Y`` has connected boundary and ``b2+ = 0``; ``Y`` being a
   rational homology sphere, the filling is negative definite.
2. Owens-Strle: if ``Y`` with ``|H_1(Y)| = delta`` square-free bounds a
   negative-definite ``X`` then ``max 4d(Y, t) >= 1 - 1/delta`` (delta odd) or
   ``>= 1`` (delta even).
3. So an L-space with square-free ``delta`` and ``max 4d`` strictly below the
   threshold admits no weak symplectic semi-filling, in particular no weakly
   fillable contact structure.

A failed test proves nothing: ``INCONCLUSIVE`` never means "fillable".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .dinv import DInvariantTable, Slope, is_lspace_slope, table
from .exactmath import format_rational, squarefree
from .knots import KnotModel


class Conclusion(str, enum.Enum):
    NO_WEAK_FILLING = "NO_WEAK_FILLING"
    INCONCLUSIVE = "INCONCLUSIVE"

    def __str__(self) -> str:
        return self.value


def owens_strle_threshold(delta: int) -> Fraction:
    if delta < 1:
        raise ValueError(f"|H_1| must be >= 1, got {delta}")
    if delta % 2 == 0:
        return Fraction(1)
    return 1 - Fraction(1, delta)


@dataclass(frozen=True)
class Verdict:
    knot_label: str
    slope: Slope
    delta: int
    delta_squarefree: bool
    lspace: bool
    max4d: Fraction
    threshold: Fraction
    negdef_excluded: bool
    conclusion: Conclusion

    def __post_init__(self):
        if self.negdef_excluded != (self.delta_squarefree and self.max4d < self.threshold):
            raise ValueError("inconsistent verdict: negdef_excluded")
        expected = (
            Conclusion.NO_WEAK_FILLING
            if self.negdef_excluded and self.lspace
            else Conclusion.INCONCLUSIVE
        )
        if self.conclusion is not expected:
            raise ValueError("inconsistent verdict: conclusion")

    def to_dict(self) -> dict:
        return {
            "knot": self.knot_label,
            "slope": self.slope.text(always_fraction=True),
            "delta": self.delta,
            "squarefree": self.delta_squarefree,
            "lspace": self.lspace,
            "max4d": format_rational(self.max4d, always_fraction=True),
            "threshold": format_rational(self.threshold, always_fraction=True),
            "negdef_excluded": self.negdef_excluded,
            "conclusion": self.conclusion.value,
        }

    def explain(self) -> str:
        """Human-readable account of each step of the argument."""
        fr = format_rational
        genus_note = "slope >= 2g(K) - 1" if self.lspace else "slope < 2g(K) - 1"
        lines = [
            f"Y = {self.slope}-surgery on {self.knot_label}",
            f"  |H_1(Y)| = delta = {self.delta}"
            f" ({'square-free' if self.delta_squarefree else 'not square-free'})",
            f"  L-space: {'yes' if self.lspace else 'not established'} ({genus_note};"
            " Ozsvath-Szabo L-space surgery criterion)",
            f"  max 4d(Y, t) = {fr(self.max4d)}",
            f"  Owens-Strle threshold ({'odd' if self.delta % 2 else 'even'} delta) = {fr(self.threshold)}",
        ]
        if self.negdef_excluded:
            lines.append(
                "  => Owens-Strle: Y bounds no negative-definite 4-manifold"
                f" (square-free delta and {fr(self.max4d)} < {fr(self.threshold)})"
            )
        elif not self.delta_squarefree:
            lines.append("  => Owens-Strle not applicable: delta is not square-free")
        else:
            lines.append(
                f"  => Owens-Strle inequality not violated ({fr(self.max4d)} >= {fr(self.threshold)})"
            )
        if self.negdef_excluded and self.lspace:
            lines.append(
                "  => Ozsvath-Szabo: a weak semi-filling of an L-space has one boundary"
                " component and b2+ = 0, hence is negative definite"
            )
            lines.append(
                "  => Y admits no weak symplectic semi-filling, so no weakly"
                " symplectically fillable contact structure"
            )
        lines.append(f"conclusion: {self.conclusion}")
        return "\n".join(lines)


def verdict_from_table(K: KnotModel, tab: DInvariantTable) -> Verdict:
    slope = tab.slope
    delta = slope.g
    sf = squarefree(delta)
    lspace = is_lspace_slope(K, slope)
    max4d = tab.max4d
    threshold = owens_strle_threshold(delta)
    excluded = sf and max4d < threshold
    conclusion = (
        Conclusion.NO_WEAK_FILLING if excluded and lspace else Conclusion.INCONCLUSIVE
    )
    return Verdict(
        knot_label=K.label,
        slope=slope,
        delta=delta,
        delta_squarefree=sf,
        lspace=lspace,
        max4d=max4d,
        threshold=threshold,
        negdef_excluded=excluded,
        conclusion=conclusion,
    )


def obstruct(K: KnotModel, slope: Slope) -> Verdict:
    return verdict_from_table(K, table(K, slope))
