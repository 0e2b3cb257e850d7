"""Blackboard cables of colored diagrams and their sub-cables.

Each crossing of the base diagram becomes a grid of crossings: the under
strand's parallel copies run "north" through the grid and the over strand's
copies run across it. Strand 1 is the leftmost copy relative to the base
orientation of the edge; odd strands keep the base orientation and even
strands are reversed.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from ..errors import MalformedPD, PairingMismatch
from .pd import LinkDiagram, collapse_crossings

logger = logging.getLogger(__name__)

Strand = Tuple[int, int]


def strand_orientation(index: int) -> int:
    """+1 if strand ``index`` (1-based) follows the base orientation."""
    return 1 if index % 2 else -1


@dataclass(frozen=True, eq=False)
class CableDiagram:
    """The full cable of a colored base diagram with strand bookkeeping.

    ``strand_of`` maps every edge of ``diagram`` to ``(component, k)`` where
    ``component`` indexes ``base.components`` and ``k`` runs from 1 to the
    component's color. ``basepoints[(component, k)]`` is the copy of the
    component's lowest edge; it is also the lowest edge of that strand.
    """

    base: LinkDiagram
    colors: Tuple[int, ...]
    diagram: LinkDiagram
    strand_of: Mapping[int, Strand]
    basepoints: Mapping[Strand, int]
    copies: Mapping[Tuple[int, int], int]

    def strands(self) -> List[Strand]:
        return sorted(self.basepoints)

    def strand_edges(self, strand: Strand) -> List[int]:
        return sorted(e for e, s in self.strand_of.items() if s == strand)

    def copy_of(self, base_edge: int, k: int) -> int:
        """Edge id of strand ``k`` running parallel to ``base_edge``."""
        return self.copies[(base_edge, k)]


def cable(diagram: LinkDiagram, colors: Optional[Sequence[int]] = None) -> CableDiagram:
    """Replace each component by ``colors[c]`` parallel strands; color 0 deletes it."""
    if colors is None:
        colors = diagram.colors
    colors = tuple(colors)
    if len(colors) != diagram.n_components:
        raise MalformedPD(
            f"{len(colors)} colors given for {diagram.n_components} components"
        )
    if any(c < 0 for c in colors):
        raise MalformedPD(f"Colors must be non-negative: {colors}")

    zero = {index for index, color in enumerate(colors) if color == 0}
    base = diagram
    edge_rep: Dict[int, int] = {e: e for e in diagram.edges}
    if zero:
        removed = [
            x
            for x in range(diagram.n_crossings)
            if diagram.under_component(x) in zero or diagram.over_component(x) in zero
        ]
        dropped = [e for e in diagram.edges if diagram.component_of[e] in zero]
        base, edge_rep = collapse_crossings(diagram, removed, dropped)

    # component of the collapsed base -> component of the original diagram
    original: Dict[int, int] = {}
    for old, new in edge_rep.items():
        original.setdefault(base.component_of[new], diagram.component_of[old])

    def color_of_edge(edge: int) -> int:
        return colors[original[base.component_of[edge]]]

    next_id = 1
    copies: Dict[Tuple[int, int], int] = {}
    strand_of: Dict[int, Strand] = {}
    for edge in base.edges:
        component = original[base.component_of[edge]]
        for k in range(1, color_of_edge(edge) + 1):
            copies[(edge, k)] = next_id
            strand_of[next_id] = (component, k)
            next_id += 1

    crossings: List[Tuple[int, int, int, int]] = []
    signs: List[int] = []
    for x, (a, b, c, d) in enumerate(base.crossings):
        sign = base.signs[x]
        under = original[base.under_component(x)]
        over = original[base.over_component(x)]
        n_u, n_o = colors[under], colors[over]

        vertical: Dict[Tuple[int, int], int] = {}
        for i in range(1, n_u + 1):
            for y in range(1, n_o):
                vertical[(i, y)] = next_id
                strand_of[next_id] = (under, i)
                next_id += 1
        horizontal: Dict[Tuple[int, int], int] = {}
        for j in range(1, n_o + 1):
            for column in range(1, n_u):
                horizontal[(j, column)] = next_id
                strand_of[next_id] = (over, j)
                next_id += 1

        for i in range(1, n_u + 1):
            for j in range(1, n_o + 1):
                y = n_o + 1 - j if sign > 0 else j
                south = copies[(a, i)] if y == 1 else vertical[(i, y - 1)]
                north = copies[(c, i)] if y == n_o else vertical[(i, y)]
                west = copies[(d, j)] if i == 1 else horizontal[(j, i - 1)]
                east = copies[(b, j)] if i == n_u else horizontal[(j, i)]
                if strand_orientation(i) > 0:
                    crossings.append((south, east, north, west))
                else:
                    crossings.append((north, west, south, east))
                signs.append(sign * strand_orientation(i) * strand_orientation(j))

    loops = [copies[(loop, k)] for loop in base.loops for k in range(1, color_of_edge(loop) + 1)]
    full = LinkDiagram(crossings, signs, loops)

    basepoints: Dict[Strand, int] = {}
    for component_edges in base.components:
        lowest = min(component_edges)
        component = original[base.component_of[lowest]]
        for k in range(1, colors[component] + 1):
            basepoints[(component, k)] = copies[(lowest, k)]

    logger.debug(
        "Cabled %r with colors %s: %d crossings, %d strands",
        diagram,
        colors,
        full.n_crossings,
        len(basepoints),
    )
    return CableDiagram(
        base=diagram,
        colors=colors,
        diagram=full,
        strand_of=strand_of,
        basepoints=basepoints,
        copies=copies,
    )


def validate_pairing(colors: Sequence[int], pairing: Sequence[Iterable[Tuple[int, int]]]) -> None:
    """Check that each component's pairs are disjoint adjacent pairs of its strands."""
    if len(pairing) != len(colors):
        raise PairingMismatch(
            f"Pairing covers {len(pairing)} components; the diagram has {len(colors)}"
        )
    for component, pairs in enumerate(pairing):
        used: Set[int] = set()
        for m, m_next in pairs:
            if m_next != m + 1 or not 1 <= m < colors[component]:
                raise PairingMismatch(
                    f"Invalid pair ({m}, {m_next}) for component {component} "
                    f"of color {colors[component]}"
                )
            if m in used or m_next in used:
                raise PairingMismatch(f"Pairs overlap at ({m}, {m_next}) on component {component}")
            used.update((m, m_next))


def deleted_strands(cable_diagram: CableDiagram, pairing: Sequence[Iterable[Tuple[int, int]]]) -> Set[Strand]:
    validate_pairing(cable_diagram.colors, pairing)
    return {
        (component, k)
        for component, pairs in enumerate(pairing)
        for pair in pairs
        for k in pair
    }


def sub_cable_map(
    cable_diagram: CableDiagram, pairing: Sequence[Iterable[Tuple[int, int]]]
) -> Tuple[LinkDiagram, Dict[int, int]]:
    """The sub-cable with paired strands deleted, and the edge renaming."""
    gone = deleted_strands(cable_diagram, pairing)
    full = cable_diagram.diagram
    if not gone:
        return full, {e: e for e in full.edges}
    dropped = [e for e in full.edges if cable_diagram.strand_of[e] in gone]
    dropped_set = set(dropped)
    removed = [
        x for x, crossing in enumerate(full.crossings) if dropped_set.intersection(crossing)
    ]
    return collapse_crossings(full, removed, dropped)


def sub_cable(
    cable_diagram: CableDiagram, pairing: Sequence[Iterable[Tuple[int, int]]]
) -> LinkDiagram:
    """The diagram D^s keeping only the strands that ``pairing`` leaves single."""
    return sub_cable_map(cable_diagram, pairing)[0]


__all__ = [
    "Strand",
    "CableDiagram",
    "strand_orientation",
    "cable",
    "validate_pairing",
    "deleted_strands",
    "sub_cable",
    "sub_cable_map",
]
