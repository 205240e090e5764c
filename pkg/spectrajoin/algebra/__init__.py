"""
Exact rational algebra: polynomials, rational functions and matrices.
"""

from .poly import Poly, RatFunc, format_fraction, interpolate, poly_gcd, to_fraction
from .matrix import (
    ExactMatrix,
    bareiss_det,
    charpoly,
    coronal,
    coronal_at,
    rank_one_det_check,
    schur_det_check,
)

__all__ = [
    "Poly",
    "RatFunc",
    "format_fraction",
    "interpolate",
    "poly_gcd",
    "to_fraction",
    "ExactMatrix",
    "bareiss_det",
    "charpoly",
    "coronal",
    "coronal_at",
    "rank_one_det_check",
    "schur_det_check",
]
