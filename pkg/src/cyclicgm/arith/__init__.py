"""Exact arithmetic kernel: rationals, sparse polynomials, rational functions."""

from .linalg import det, det_cofactor, rank
from .multipoly import BigRational, MultiPoly, poly_gcd, poly_mul
from .polyx import InexactDivision, PolyInX, poly_divexact_linear, synthetic_division
from .printing import format_poly, format_ratfunc
from .ratfunc import RatFunc, ratfunc_reduce
from .substitute import DegenerateSubstitution, substitute
from .vartable import MAIN_VARIABLE, VarTable, VarTableMismatch

__all__ = [
    "BigRational",
    "DegenerateSubstitution",
    "InexactDivision",
    "MAIN_VARIABLE",
    "MultiPoly",
    "PolyInX",
    "RatFunc",
    "VarTable",
    "VarTableMismatch",
    "det",
    "det_cofactor",
    "format_poly",
    "format_ratfunc",
    "poly_divexact_linear",
    "poly_gcd",
    "poly_mul",
    "rank",
    "ratfunc_reduce",
    "substitute",
    "synthetic_division",
]
