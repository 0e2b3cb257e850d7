"""Chain maps of cobordisms: elementary moves, Reidemeister equivalences and movies."""

from .maps import CobordismMap, elementary_map, moved_marks, relabel_map
from .movie import (
    annulus_map,
    homology_map,
    movie_independence,
    movie_map,
    torus_composite,
    transport,
)
from .psi import PsiMap, psi_saddle_merge
from .reidemeister import ReidemeisterEquivalence, reidemeister_equivalence, tangle_matching

__all__ = [
    "CobordismMap",
    "elementary_map",
    "moved_marks",
    "relabel_map",
    "ReidemeisterEquivalence",
    "reidemeister_equivalence",
    "tangle_matching",
    "movie_map",
    "annulus_map",
    "transport",
    "homology_map",
    "torus_composite",
    "movie_independence",
    "PsiMap",
    "psi_saddle_merge",
]
