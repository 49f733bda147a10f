"""Exact arithmetic substrate: small finite fields, sparse polynomials, truncated series."""
from .fields import GF, FieldElement, FieldError, FiniteField
from .poly import (
    VARIABLES,
    ZZ,
    MultiPoly,
    RationalFunction,
    RingMismatch,
    generic_variables,
    parse_poly,
    poly_substitute,
)
from .series import (
    SeriesError,
    TruncatedSeries,
    compositional_inverse,
    series_invert,
    series_multiply,
    series_substitute,
)

__all__ = [
    "GF",
    "FieldElement",
    "FieldError",
    "FiniteField",
    "VARIABLES",
    "ZZ",
    "MultiPoly",
    "RationalFunction",
    "RingMismatch",
    "generic_variables",
    "parse_poly",
    "poly_substitute",
    "SeriesError",
    "TruncatedSeries",
    "compositional_inverse",
    "series_invert",
    "series_multiply",
    "series_substitute",
]
