"""Resolutions of irreducible sl(2) representations by tensor powers of V_1."""

from .resolution import (
    GENERATORS,
    ResolutionComplex,
    build_Cn,
    d_squared_zero,
    equivariance_residuals,
    subcomplex_check,
    symmetric_power_check,
    verify_resolution,
)
from .tensor import MINUS, PLUS, TensorSpace, bits_of, contraction_h, index_of, weight

__all__ = [
    "PLUS",
    "MINUS",
    "TensorSpace",
    "bits_of",
    "index_of",
    "weight",
    "contraction_h",
    "GENERATORS",
    "ResolutionComplex",
    "build_Cn",
    "d_squared_zero",
    "equivariance_residuals",
    "symmetric_power_check",
    "subcomplex_check",
    "verify_resolution",
]
