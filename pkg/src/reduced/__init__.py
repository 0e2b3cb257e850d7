"""Reduced colored homology over F2."""

from .theory import (
    CutDiagram,
    ReducedComplex,
    TangleResolution,
    boundary_matching,
    check_e_matching,
    cut_open,
    euler_matches_reduced_oracle,
    framing_shift,
    n1_sequence_check,
    reduced_complex,
    reduced_homology,
    tangle_resolution,
)

__all__ = [
    "CutDiagram",
    "cut_open",
    "boundary_matching",
    "TangleResolution",
    "tangle_resolution",
    "ReducedComplex",
    "reduced_complex",
    "reduced_homology",
    "check_e_matching",
    "framing_shift",
    "euler_matches_reduced_oracle",
    "n1_sequence_check",
]
