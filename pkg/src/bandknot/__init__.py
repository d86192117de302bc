"""bandknot: exact knot invariants and twist families of band-presented knots."""

from .laurent import LaurentPolynomial, parse_poly
from .braid import BraidWord, parse_braid, alexander_burau

__all__ = [
    "LaurentPolynomial",
    "parse_poly",
    "BraidWord",
    "parse_braid",
    "alexander_burau",
]

__version__ = "0.1.0"
