"""Reduced colored homology over F2.

The distinguished component is cut at its basepoint; its n-cable becomes a
tangle with 2n ends, one pair per cut strand. Coupling the tangle complex
with the delta module of the rainbow matching keeps only resolutions that
join every cut strand back to itself. These are exactly the resolutions in
which each marked basepoint copy lies on its own circle, so the marked cube
computes the reduced complex. Other components of a link carry the usual
pairing assembly.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..algebra import BettiTable, ChainComplex, FieldTag, LaurentPoly, euler_characteristic
from ..cobordism import tangle_matching
from ..colored import ColoredComplex, Variant, colored_complex
from ..diagram import CableDiagram, LinkDiagram, strand_orientation
from ..errors import InvariantViolation, OutOfRange
from ..khovanov import KhovanovCube, khovanov_cube, khovanov_homology, state_bits
from ..oracle import Matching, identify_e, reduced_colored_jones

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CutDiagram:
    """A diagram with one component cut open at ``edge``."""

    diagram: LinkDiagram
    component: int
    edge: int

    @property
    def n_crossings(self) -> int:
        return self.diagram.n_crossings

    @property
    def closed_components(self) -> int:
        return self.diagram.n_components - 1


def cut_open(diagram: LinkDiagram, component: int = 0) -> CutDiagram:
    """Cut ``component`` at its lowest edge, the basepoint used for cables."""
    diagram._require_component(component)
    return CutDiagram(diagram, component, min(diagram.components[component]))


def _cut_edges(cable_diagram: CableDiagram, distinguished: int) -> List[int]:
    n = cable_diagram.colors[distinguished]
    return [cable_diagram.basepoints[(distinguished, k)] for k in range(1, n + 1)]


def boundary_matching(cable_diagram: CableDiagram, distinguished: int, state: int) -> Matching:
    """Matching of the 2n cut ends joined by the resolution ``state`` of the full cable.

    Strand k has end k on the side facing the base orientation and end
    2n + 1 - k on the other side, so a resolution joining every strand to
    itself has the rainbow matching.
    """
    diagram = cable_diagram.diagram
    n = cable_diagram.colors[distinguished]
    cuts = _cut_edges(cable_diagram, distinguished)
    bits = state_bits(state, diagram.n_crossings)
    local = {x: bits[x] for x in range(diagram.n_crossings)}
    inner = set(diagram.edges) - set(cuts)
    pairs = set(tangle_matching(diagram, local, inner)) if local else set()
    for edge in cuts:
        if diagram.is_loop(edge):
            pairs.add(frozenset(((edge, True), (edge, False))))

    def point(end) -> int:
        edge, at_head = end
        k = cable_diagram.strand_of[edge][1]
        forward = at_head if strand_orientation(k) > 0 else not at_head
        return k if forward else 2 * n + 1 - k

    matching = []
    for pair in pairs:
        ends = sorted(point(end) for end in pair)
        if len(ends) != 2:
            raise InvariantViolation(f"Cut end pairs with itself in state {state}")
        matching.append(tuple(ends))
    return tuple(sorted(matching))  # type: ignore[return-value]


@dataclass(frozen=True)
class TangleResolution:
    """A resolution of the cut-open cable: closed circles plus the arcs between ends."""

    state: int
    circles: Tuple[Tuple[int, ...], ...]
    matching: Matching


def tangle_resolution(cable_diagram: CableDiagram, distinguished: int, state: int) -> TangleResolution:
    cuts = set(_cut_edges(cable_diagram, distinguished))
    diagram = cable_diagram.diagram
    closed = tuple(
        circle
        for circle in diagram.resolution_circles(state_bits(state, diagram.n_crossings))
        if not cuts.intersection(circle)
    )
    return TangleResolution(state, closed, boundary_matching(cable_diagram, distinguished, state))


@dataclass
class ReducedComplex:
    """The reduced colored complex with the marked cube of the full cable."""

    tangle: CutDiagram
    colors: Tuple[int, ...]
    field: FieldTag
    cube: KhovanovCube
    colored: ColoredComplex

    @property
    def distinguished(self) -> int:
        return self.tangle.component

    @property
    def complex(self) -> ChainComplex:
        return self.colored.complex

    def resolutions(self) -> List[int]:
        """Surviving resolutions of the full cable."""
        return self.cube.states()

    def betti(self) -> BettiTable:
        return self.colored.betti()

    def euler_characteristic(self) -> LaurentPoly:
        return self.colored.euler_characteristic()

    def to_json(self, table: Optional[BettiTable] = None) -> Dict[str, Any]:
        return self.colored.to_json(table)


def check_e_matching(complex_: ReducedComplex) -> None:
    """Raise unless the surviving resolutions are exactly those with the rainbow matching.

    A survivor must also keep every closed circle of its tangle resolution
    free, since only the circles through the cut ends are pinned.
    """
    n = complex_.colors[complex_.distinguished]
    if n == 0:
        return
    e = identify_e(n)
    cable_diagram = complex_.colored.cable
    survivors = set(complex_.resolutions())
    for state in range(1 << cable_diagram.diagram.n_crossings):
        resolution = tangle_resolution(cable_diagram, complex_.distinguished, state)
        matched = resolution.matching == e
        if matched != (state in survivors):
            raise InvariantViolation(
                f"Resolution {state} has matching {resolution.matching} "
                f"but {'survives' if state in survivors else 'is dropped'}"
            )
        if matched:
            free = len(complex_.cube.circles[state]) - len(complex_.cube.marked_circles[state])
            if free != len(resolution.circles):
                raise InvariantViolation(
                    f"Resolution {state} has {len(resolution.circles)} closed circles "
                    f"but {free} unpinned circles in the marked cube"
                )



def reduced_complex(
    diagram: LinkDiagram,
    colors: Optional[Sequence[int]] = None,
    distinguished: int = 0,
    field: FieldTag = FieldTag.F2,
) -> ReducedComplex:
    """The reduced complex of ``diagram`` with ``distinguished`` cut open."""
    if field is not FieldTag.F2:
        raise OutOfRange(f"The reduced theory is built over f2 only, got {field.value}")
    tangle = cut_open(diagram, distinguished)
    colored = colored_complex(diagram, colors, field, Variant.CONTRACT_FULL, distinguished=distinguished)
    (bottom,) = colored.levels[0]
    cube = khovanov_cube(colored.cable.diagram, field, colored.marked[bottom])
    result = ReducedComplex(tangle, colored.colors, field, cube, colored)
    logger.debug(
        "Reduced complex of %r, colors %s, component %d: %d of %d resolutions survive",
        diagram,
        list(colored.colors),
        distinguished,
        len(cube.states()),
        1 << cube.n_crossings,
    )
    return result


def reduced_homology(
    diagram: LinkDiagram,
    colors: Optional[Sequence[int]] = None,
    distinguished: int = 0,
) -> BettiTable:
    """Reduced colored homology over F2."""
    return reduced_complex(diagram, colors, distinguished).betti()


def framing_shift(table: BettiTable, n: int, framing: int = 1) -> BettiTable:
    """The table after raising the framing by ``framing`` curls, as predicted.

    One positive curl shifts (i, j) by (-2m^2, -2m(m+1)) for n = 2m and by
    (-2m(m+1), -2m(m+2)) for n = 2m + 1.
    """
    if n < 0:
        raise OutOfRange(f"Color must be non-negative: {n}")
    m = n // 2
    if n % 2 == 0:
        di, dj = -2 * m * m, -2 * m * (m + 1)
    else:
        di, dj = -2 * m * (m + 1), -2 * m * (m + 2)
    return table.shifted(di * framing, dj * framing)


def euler_matches_reduced_oracle(
    diagram: LinkDiagram, colors: Optional[Sequence[int]] = None, distinguished: int = 0
) -> bool:
    complex_ = reduced_complex(diagram, colors, distinguished)
    expected = reduced_colored_jones(diagram, complex_.colors, distinguished)
    return complex_.euler_characteristic() == expected


def n1_sequence_check(diagram: LinkDiagram) -> bool:
    """Compare Khovanov and reduced Khovanov homology of a knot over F2.

    The sequence 0 -> C~{1} -> C -> C~{-1} -> 0 bounds each rank of H by
    the two shifted reduced ranks and fixes the Euler characteristics.
    """
    if diagram.n_components != 1:
        raise OutOfRange(f"Expected a knot diagram, got {diagram.n_components} components")
    field = FieldTag.F2
    full, _ = khovanov_homology(diagram, field)
    reduced, _ = khovanov_homology(diagram, field, [min(diagram.edges)])
    bounded = all(
        rank <= reduced.rank(i, j - 1) + reduced.rank(i, j + 1)
        for (i, j), rank in full.ranks.items()
    )
    q = LaurentPoly.q
    euler = euler_characteristic(full) == (q(1) + q(-1)) * euler_characteristic(reduced)
    logger.info("Reduced/unreduced comparison for %r: bounded=%s euler=%s", diagram, bounded, euler)
    return bounded and euler


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
