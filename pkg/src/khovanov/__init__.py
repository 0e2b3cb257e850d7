"""Khovanov cubes of resolutions and their homology."""

from .cube import (
    FROBENIUS,
    ONE,
    X,
    CircleMatch,
    FrobeniusAlgebra,
    KhovanovCube,
    cube_sign,
    khovanov_complex,
    khovanov_cube,
    match_circles,
    state_bits,
)
from .homology import betti_from_json, betti_json, khovanov_homology, poincare

__all__ = [
    "ONE",
    "X",
    "FROBENIUS",
    "FrobeniusAlgebra",
    "CircleMatch",
    "KhovanovCube",
    "match_circles",
    "state_bits",
    "cube_sign",
    "khovanov_cube",
    "khovanov_complex",
    "khovanov_homology",
    "poincare",
    "betti_json",
    "betti_from_json",
]
