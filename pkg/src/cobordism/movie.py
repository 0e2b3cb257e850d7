"""Maps of movies, the annulus contraction maps and checks built on them."""

import logging
from typing import Dict, Iterable, Optional, Sequence, Tuple

from ..algebra import ChainMap, FieldTag, Reduction
from ..diagram import CableDiagram, Movie, contraction_movie
from ..khovanov import KhovanovCube, khovanov_cube, khovanov_homology
from .maps import CobordismMap, elementary_map

logger = logging.getLogger(__name__)

Pairing = Sequence[Sequence[Tuple[int, int]]]


def movie_map(
    movie: Movie,
    field: FieldTag,
    marked: Optional[Iterable[int]] = None,
    start: Optional[KhovanovCube] = None,
) -> CobordismMap:
    """Compose the maps of every move of ``movie``.

    The result has bidegree ``(0, movie.euler())``. Marked edges are carried
    from frame to frame.
    """
    cube = start if start is not None else khovanov_cube(movie.start, field, marked)
    result = CobordismMap.identity(cube)
    for move in movie.moves:
        step = elementary_map(move, cube)
        result = result.then(step)
        cube = step.target
    logger.debug("Movie of %d moves gives a map of bidegree %s", len(movie), result.bidegree)
    return result


def annulus_map(
    cable_diagram: CableDiagram,
    pairing: Pairing,
    component: int,
    m: int,
    field: FieldTag,
    basepoint: Optional[int] = None,
    expand: bool = False,
    marked: Optional[Iterable[int]] = None,
) -> CobordismMap:
    """The map h of the annulus joining strands m, m+1 of one component.

    Contracting goes from C(D^s) to C(D^s'); with ``expand`` the reversed
    movie gives the map C(D^s') -> C(D^s).
    """
    movie = contraction_movie(cable_diagram, pairing, component, m, basepoint)
    if expand:
        movie = movie.reversed()
    return movie_map(movie, field, marked)


def transport(f: CobordismMap, r_src: Reduction, r_tgt: Reduction) -> ChainMap:
    """The map p f i between homologies."""
    return ChainMap(
        r_src.homology,
        r_tgt.homology,
        f.bidegree,
        func=lambda key: r_tgt.project(f.run(r_src.include({key: 1}))),
        name=f"H({f.name})",
    )


def homology_map(f: CobordismMap) -> ChainMap:
    """``f`` on homology, using the cached reductions of both ends."""
    _, r_src = khovanov_homology(f.source.diagram, f.source.field, f.source.marked)
    _, r_tgt = khovanov_homology(f.target.diagram, f.target.field, f.target.marked)
    return transport(f, r_src, r_tgt)


def torus_composite(
    cable_diagram: CableDiagram,
    pairing: Pairing,
    component: int,
    m: int,
    field: FieldTag,
) -> ChainMap:
    """Contract after expand on H(D^s'): the annulus glued to its reverse."""
    contract = annulus_map(cable_diagram, pairing, component, m, field)
    expand = annulus_map(cable_diagram, pairing, component, m, field, expand=True)
    return homology_map(expand.then(contract))


def movie_independence(
    cable_diagram: CableDiagram,
    pairing: Pairing,
    component: int,
    m: int,
    field: FieldTag,
    basepoints: Sequence[int],
) -> Dict[str, object]:
    """Ranks of the contraction map on homology for several basepoints."""
    ranks: Dict[int, int] = {}
    for basepoint in basepoints:
        h = annulus_map(cable_diagram, pairing, component, m, field, basepoint=basepoint)
        ranks[basepoint] = homology_map(h).rank()
    report = {"ranks": ranks, "agree": len(set(ranks.values())) <= 1}
    logger.info("Contraction map ranks by basepoint: %s", ranks)
    return report


__all__ = [
    "movie_map",
    "annulus_map",
    "transport",
    "homology_map",
    "torus_composite",
    "movie_independence",
]
