"""Colored complexes built from cable homologies, their variants and checks."""

from .checks import (
    compare_variants,
    composite_invertible,
    d0_surjective,
    euler_matches_oracle,
    framed_unknot,
    framed_unknot_ranks,
    long_exact_sequence_check,
    same_colored_homology,
)
from .complex import ColoredComplex, Variant, colored_complex, colored_homology

__all__ = [
    "Variant",
    "ColoredComplex",
    "colored_complex",
    "colored_homology",
    "compare_variants",
    "d0_surjective",
    "composite_invertible",
    "euler_matches_oracle",
    "framed_unknot",
    "framed_unknot_ranks",
    "long_exact_sequence_check",
    "same_colored_homology",
]
