"""Exact determinants, dynamic determinant updates, and convex hulls.

Everything is exact: integer inputs stay on the integer kernel, anything
rational (Fraction, float, "p/q" strings) goes through GMP rationals, and
results come back as int or fractions.Fraction.
"""

from ._core import (
    DegenerateInput,
    DimensionMismatch,
    DynamicAdjoint,
    DynamicInverse,
    Error,
    Hull,
    InvalidScenario,
    NonExactDivision,
    ParseError,
    SingularMatrix,
    SingularUpdate,
    TooFewPoints,
    __version__,
    adjoint,
    convex_hull,
    det,
    gen_points,
    inverse,
)

__all__ = [
    "DegenerateInput",
    "DimensionMismatch",
    "DynamicAdjoint",
    "DynamicInverse",
    "Error",
    "Hull",
    "InvalidScenario",
    "NonExactDivision",
    "ParseError",
    "SingularMatrix",
    "SingularUpdate",
    "TooFewPoints",
    "__version__",
    "adjoint",
    "convex_hull",
    "det",
    "gen_points",
    "inverse",
]
