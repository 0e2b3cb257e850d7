"""Pairings of neighbouring dots, their arrows and sign choices."""

from .poset import (
    MultiPairing,
    Pair,
    Pairing,
    added_pair,
    all_pairings,
    arrows,
    dimension_identity,
    enumerate_pairings,
    left_pairs_sign,
    multi_arrows,
    multi_pairings,
    pairing_count,
)
from .signs import (
    SignAssignment,
    Square,
    is_satisfactory,
    solve_satisfactory_signs,
    square_relation,
)

__all__ = [
    "Pair",
    "Pairing",
    "MultiPairing",
    "enumerate_pairings",
    "all_pairings",
    "arrows",
    "added_pair",
    "left_pairs_sign",
    "multi_pairings",
    "multi_arrows",
    "pairing_count",
    "dimension_identity",
    "Square",
    "SignAssignment",
    "square_relation",
    "solve_satisfactory_signs",
    "is_satisfactory",
]
