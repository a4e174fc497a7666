"""Exact Heegaard Floer d-invariants of positive surgeries on L-space knots,
and the Owens-Strle obstruction to weak symplectic fillings."""

from .exactmath import Rational, gcd, squarefree, format_rational
from .laurent import LaurentPoly, ParseError
from .knots import (
    KnotModel,
    ValidationError,
    pretzel,
    from_polynomial,
    torsion,
    torsion_closed_form,
    V,
    H,
)
from .dinv import (
    Slope,
    DInvariantTable,
    d_lens,
    lens_table,
    d_unknot_surgery,
    d_integral,
    d_rational,
    table,
    is_lspace_slope,
)
from .obstruction import Conclusion, Verdict, owens_strle_threshold, obstruct

__version__ = "0.1.0"
