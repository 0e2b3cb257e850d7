"""The map of colored complexes induced by a saddle that merges two components.

Over F2, for each multi-pairing s the block from H(D^s) is zero when the
pairings on the two merging components share a dot. Otherwise it is the
composite of three cobordisms landing in H(D0^s0), where s0 carries the
union of both pairings on the merged component:

1. a dot on each strand of one component mirroring a pair of the other,
2. annulus contractions closing those mirrored pairs,
3. saddles joining equally numbered remaining strands, innermost first.
"""

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

from ..algebra import ChainMap, FieldTag
from ..algebra.chain import Key, Vector
from ..diagram import (
    CableDiagram,
    Dot,
    LinkDiagram,
    Move,
    Movie,
    Saddle,
    contraction_movie,
    diagram_isomorphism,
    sub_cable_map,
)
from ..errors import ColorMismatch, InvalidMove, InvariantViolation, OutOfRange
from ..khovanov import khovanov_cube
from ..pairings import MultiPairing, Pairing
from .maps import relabel_map
from .movie import movie_map, transport

if TYPE_CHECKING:
    from ..colored import ColoredComplex

logger = logging.getLogger(__name__)


@dataclass
class PsiMap:
    """The assembled map together with the multi-pairing each block lands on."""

    source: "ColoredComplex"
    target: "ColoredComplex"
    landing: Dict[MultiPairing, Optional[MultiPairing]]
    blocks: Dict[MultiPairing, ChainMap]
    chain_map: ChainMap

    def check(self, limit: Optional[int] = None) -> None:
        """Raise unless psi commutes with both colored differentials."""
        self.chain_map.check(limit)


def _strand_edge(cable_diagram: CableDiagram, base_edge: int, strand: int, renaming) -> int:
    return renaming[cable_diagram.copy_of(base_edge, strand)]


def _block_movie(
    cable_diagram: CableDiagram,
    s: MultiPairing,
    first: int,
    second: int,
    e: int,
    f: int,
) -> Movie:
    pairing: List[List[Tuple[int, int]]] = [p.as_list() for p in s]
    start, renaming = sub_cable_map(cable_diagram, pairing)
    s1, s2 = s[first], s[second]
    moves: List[Move] = []
    for m, _ in s2.pairs:
        moves.append(Dot(renaming[cable_diagram.basepoints[(first, m)]]))
    for t, _ in s1.pairs:
        moves.append(Dot(renaming[cable_diagram.basepoints[(second, t)]]))
    for component, mirrored in ((first, s2), (second, s1)):
        for m, _ in mirrored.pairs:
            moves.extend(contraction_movie(cable_diagram, pairing, component, m).moves)
            pairing[component].append((m, m + 1))
    _, renaming = sub_cable_map(cable_diagram, pairing)
    merged = Pairing(s1.n, s1.pairs + s2.pairs)
    for r in sorted(merged.singles(), reverse=True):
        moves.append(
            Saddle(
                _strand_edge(cable_diagram, e, r, renaming),
                _strand_edge(cable_diagram, f, r, renaming),
            )
        )
    return Movie(start, moves)


def psi_saddle_merge(
    diagram: LinkDiagram,
    saddle: Saddle,
    colors: Optional[Sequence[int]] = None,
    field: FieldTag = FieldTag.F2,
) -> PsiMap:
    """psi for ``saddle`` joining two components of ``diagram`` of equal color.

    Every component needs a positive color so that base edges keep their
    ids in the cable.
    """
    from ..colored import colored_complex

    if field is not FieldTag.F2:
        raise OutOfRange(f"The merge map is built over f2 only, got {field.value}")
    colors = tuple(diagram.colors if colors is None else colors)
    if any(c < 1 for c in colors):
        raise OutOfRange(f"Every component needs a positive color, got {colors}")
    e, f = saddle.e, saddle.f
    for edge in (e, f):
        if not diagram.has_edge(edge):
            raise InvalidMove(f"No edge {edge} in {diagram!r}")
    first, second = diagram.component_of[e], diagram.component_of[f]
    if first == second:
        raise InvalidMove(f"Saddle between edges {e} and {f} does not join two components")
    n = colors[first]
    if colors[second] != n:
        raise ColorMismatch(f"Merging components colored {n} and {colors[second]}")

    merged, mapping = saddle.apply_with_map(diagram.with_colors(list(colors)))
    landing_component = [
        merged.component_of[mapping[min(edges)]] for edges in diagram.components
    ]
    source = colored_complex(diagram, colors, field)
    target = colored_complex(merged, merged.colors, field)

    landing: Dict[MultiPairing, Optional[MultiPairing]] = {}
    blocks: Dict[MultiPairing, ChainMap] = {}
    for level in source.levels.values():
        for s in level:
            s1, s2 = s[first], s[second]
            if s1.dots() & s2.dots():
                landing[s] = None
                continue
            parts: List[Optional[Pairing]] = [None] * merged.n_components
            for component, pairing in enumerate(s):
                if component not in (first, second):
                    parts[landing_component[component]] = pairing
            parts[landing_component[first]] = Pairing(n, s1.pairs + s2.pairs)
            s0: MultiPairing = tuple(parts)  # type: ignore[assignment]
            landing[s] = s0

            movie = _block_movie(source.cable, s, first, second, e, f)
            along = movie_map(movie, field)
            end_diagram, _ = sub_cable_map(target.cable, [p.as_list() for p in s0])
            iso = diagram_isomorphism(movie.end, end_diagram)
            if iso is None:
                raise InvariantViolation(
                    f"Merged cable for {s} does not match the target sub-cable {end_diagram!r}"
                )
            full = along.then(relabel_map(along.target, khovanov_cube(end_diagram, field), iso))
            blocks[s] = transport(full, source.reductions[s], target.reductions[s0])

    def image(key: Key) -> Vector:
        s, inner = source.complex.label(key)  # type: ignore[misc]
        s0 = landing[s]
        if s0 is None:
            return {}
        return {target.key_of(s0, hit): v for hit, v in blocks[s].image(inner).items()}

    chain_map = ChainMap(
        source.complex, target.complex, (0, -n), func=image, name=f"psi({saddle!r})"
    )
    logger.debug(
        "psi for %r: %d blocks, %d zero by shared dots",
        saddle,
        len(blocks),
        sum(1 for s0 in landing.values() if s0 is None),
    )
    return PsiMap(source, target, landing, blocks, chain_map)


__all__ = ["PsiMap", "psi_saddle_merge"]
