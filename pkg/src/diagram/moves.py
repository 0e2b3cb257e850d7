"""Elementary diagram moves and movies built from them.

Every move acts on a :class:`LinkDiagram` and reports the edge renaming it
causes, so cobordism maps can follow generators from frame to frame. Edge
ids that survive a move keep their meaning; joined edges take the smallest
id of their class.
"""

import logging
from dataclasses import dataclass, field
from typing import ClassVar, Dict, List, Optional, Sequence, Tuple

from ..errors import (
    InvalidMove,
    InvalidSite,
    MoveValidationFailed,
    NonAdjacentPair,
    NonPlanar,
    OrientationInconsistent,
)
from .cable import CableDiagram, sub_cable, sub_cable_map, validate_pairing
from .pd import LinkDiagram, collapse_crossings, inherit_colors

logger = logging.getLogger(__name__)

EdgeMap = Dict[int, int]


def _identity(diagram: LinkDiagram) -> EdgeMap:
    return {e: e for e in diagram.edges}


def _rebuild(
    diagram: LinkDiagram,
    crossings: Sequence[Sequence[int]],
    loops: Sequence[int],
    mapping: EdgeMap,
    default_color: int = 1,
) -> LinkDiagram:
    """Validate a relabelled diagram, turning layout failures into InvalidSite."""
    try:
        result = LinkDiagram(crossings, diagram.signs, loops)
    except (NonPlanar, OrientationInconsistent) as e:
        raise InvalidSite(f"Move leaves an invalid diagram: {e}") from e
    return result.with_colors(inherit_colors(diagram, result, mapping, default_color))


def _check_crossing(diagram: LinkDiagram, x: int) -> None:
    if not 0 <= x < diagram.n_crossings:
        raise InvalidSite(f"No crossing {x}; diagram has {diagram.n_crossings}")


def _shared_edges(diagram: LinkDiagram, first: int, second: int) -> List[int]:
    return sorted(
        e
        for e in diagram.head
        if {diagram.head[e][0], diagram.tail[e][0]} == {first, second}
    )


def _slot_at(diagram: LinkDiagram, edge: int, x: int) -> int:
    for end in (diagram.head[edge], diagram.tail[edge]):
        if end[0] == x:
            return end[1]
    raise InvalidSite(f"Edge {edge} does not meet crossing {x}")


def r2_bigon(diagram: LinkDiagram, c1: int, c2: int) -> Tuple[int, int]:
    """The (over, under) edges of a bigon face bounded by crossings c1 and c2."""
    _check_crossing(diagram, c1)
    _check_crossing(diagram, c2)
    if c1 == c2:
        raise InvalidSite("A Reidemeister II site needs two distinct crossings")
    if diagram.signs[c1] == diagram.signs[c2]:
        raise InvalidSite(f"Crossings {c1} and {c2} have the same sign")
    shared = _shared_edges(diagram, c1, c2)
    overs = [e for e in shared if _slot_at(diagram, e, c1) % 2 and _slot_at(diagram, e, c2) % 2]
    unders = [
        e for e in shared if not _slot_at(diagram, e, c1) % 2 and not _slot_at(diagram, e, c2) % 2
    ]
    for over in overs:
        for under in unders:
            for p in range(4):
                face = diagram.face((c1, p))
                if len(face) != 2:
                    continue
                edges = {diagram.crossings[x][q] for x, q in face}
                if edges == {over, under}:
                    return over, under
    raise InvalidSite(f"Crossings {c1} and {c2} do not bound a Reidemeister II bigon")


def r2_minus(diagram: LinkDiagram, c1: int, c2: int) -> Tuple[LinkDiagram, EdgeMap]:
    """Remove the bigon between c1 and c2; returns the smaller diagram and edge map."""
    r2_bigon(diagram, c1, c2)
    return collapse_crossings(diagram, (c1, c2))


def r3_triangle(diagram: LinkDiagram, c1: int, c2: int, c3: int) -> Tuple[int, int, int]:
    """The triangle edges between (c1, c2), (c1, c3) and (c2, c3)."""
    for x in (c1, c2, c3):
        _check_crossing(diagram, x)
    if len({c1, c2, c3}) != 3:
        raise InvalidSite("A Reidemeister III site needs three distinct crossings")
    triangle = []
    for first, second in ((c1, c2), (c1, c3), (c2, c3)):
        shared = _shared_edges(diagram, first, second)
        if len(shared) != 1:
            raise InvalidSite(
                f"Crossings {first} and {second} share {len(shared)} edges; expected 1"
            )
        triangle.append(shared[0])
    roles = sorted(
        sum(_slot_at(diagram, e, x) % 2 for x in (diagram.head[e][0], diagram.tail[e][0]))
        for e in triangle
    )
    if roles != [0, 1, 2]:
        raise InvalidSite("Reidemeister III needs a strand over at both of its crossings")
    faces = [diagram.face((c1, p)) for p in range(4)]
    is_face = any(
        len(face) == 3 and {diagram.crossings[x][q] for x, q in face} == set(triangle)
        for face in faces
    )
    if not is_face:
        raise InvalidSite(f"Crossings {c1}, {c2}, {c3} do not bound a triangle face")
    return triangle[0], triangle[1], triangle[2]


@dataclass(frozen=True)
class Move:
    """Base class for moves; subclasses implement ``apply_with_map``."""

    euler: ClassVar[int] = 0

    def apply_with_map(self, diagram: LinkDiagram) -> Tuple[LinkDiagram, EdgeMap]:
        raise NotImplementedError

    def apply(self, diagram: LinkDiagram) -> LinkDiagram:
        return self.apply_with_map(diagram)[0]

    def reverse(self, before: LinkDiagram) -> "Move":
        """The move undoing this one when applied to ``self.apply(before)``."""
        raise NotImplementedError


@dataclass(frozen=True)
class R2Minus(Move):
    c1: int
    c2: int

    def apply_with_map(self, diagram: LinkDiagram) -> Tuple[LinkDiagram, EdgeMap]:
        return r2_minus(diagram, self.c1, self.c2)

    def reverse(self, before: LinkDiagram) -> Move:
        return R2Plus(before, (self.c1, self.c2))


@dataclass(frozen=True)
class R2Plus(Move):
    """Insert a bigon: ``result`` is the diagram after the move."""

    result: LinkDiagram
    crossings: Tuple[int, int]

    def apply_with_map(self, diagram: LinkDiagram) -> Tuple[LinkDiagram, EdgeMap]:
        smaller, _ = r2_minus(self.result, *self.crossings)
        if smaller != diagram:
            raise InvalidMove(
                f"Removing crossings {self.crossings} from the target does not give "
                f"the current diagram"
            )
        return self.result, _identity(diagram)

    def reverse(self, before: LinkDiagram) -> Move:
        return R2Minus(*self.crossings)


@dataclass(frozen=True)
class R3(Move):
    """Slide one strand across the crossing of the other two."""

    c1: int
    c2: int
    c3: int

    def apply_with_map(self, diagram: LinkDiagram) -> Tuple[LinkDiagram, EdgeMap]:
        triangle = r3_triangle(diagram, self.c1, self.c2, self.c3)
        crossings = [list(c) for c in diagram.crossings]
        for t in triangle:
            x, p_out = diagram.tail[t]
            y, p_in = diagram.head[t]
            ext_in = diagram.crossings[x][(p_out + 2) % 4]
            ext_out = diagram.crossings[y][(p_in + 2) % 4]
            crossings[x][(p_out + 2) % 4] = t
            crossings[x][p_out] = ext_out
            crossings[y][p_in] = ext_in
            crossings[y][(p_in + 2) % 4] = t
        result = _rebuild(diagram, crossings, diagram.loops, _identity(diagram))
        return result, _identity(diagram)

    def reverse(self, before: LinkDiagram) -> Move:
        return self


@dataclass(frozen=True)
class Saddle(Move):
    """Oriented saddle between edges ``e`` and ``f``.

    Two loops merge into loop ``e``; a loop merges into an arc; a single
    existing loop splits into loops ``e`` and ``f``; an existing arc pinches
    off the missing id as a new loop. Two arcs exchange their heads.
    """

    e: int
    f: int
    euler: ClassVar[int] = -1

    def apply_with_map(self, diagram: LinkDiagram) -> Tuple[LinkDiagram, EdgeMap]:
        e, f = self.e, self.f
        if e == f:
            raise InvalidSite(f"Saddle needs two distinct edges, got {e} twice")
        has_e, has_f = diagram.has_edge(e), diagram.has_edge(f)
        if not has_e and not has_f:
            raise InvalidSite(f"Neither edge {e} nor {f} is in the diagram")
        crossings = [list(c) for c in diagram.crossings]
        loops = list(diagram.loops)
        mapping = _identity(diagram)

        if has_e and has_f:
            loop_e, loop_f = diagram.is_loop(e), diagram.is_loop(f)
            if loop_f:
                loops.remove(f)
                mapping[f] = e
            elif loop_e:
                loops.remove(e)
                mapping[e] = f
            else:
                xe, pe = diagram.head[e]
                xf, pf = diagram.head[f]
                crossings[xe][pe] = f
                crossings[xf][pf] = e
                result = _rebuild(diagram, crossings, loops, mapping)
                return result, mapping
            result = _rebuild(diagram, crossings, loops, mapping)
            return result, mapping

        existing, new = (e, f) if has_e else (f, e)
        if new <= 0:
            raise InvalidSite(f"New edge ids must be positive, got {new}")
        color = diagram.colors[diagram.component_of[existing]]
        loops.append(new)
        return _rebuild(diagram, crossings, loops, mapping, color), mapping

    def reverse(self, before: LinkDiagram) -> Move:
        if not before.has_edge(self.e) and before.is_loop(self.f):
            return Saddle(self.f, self.e)
        return self


@dataclass(frozen=True)
class Birth(Move):
    e: int
    color: int = 1
    euler: ClassVar[int] = 1

    def apply_with_map(self, diagram: LinkDiagram) -> Tuple[LinkDiagram, EdgeMap]:
        if diagram.has_edge(self.e) or self.e <= 0:
            raise InvalidSite(f"Cannot create loop {self.e}: id in use or not positive")
        loops = list(diagram.loops) + [self.e]
        mapping = _identity(diagram)
        return _rebuild(diagram, diagram.crossings, loops, mapping, self.color), mapping

    def reverse(self, before: LinkDiagram) -> Move:
        return Death(self.e)


@dataclass(frozen=True)
class Death(Move):
    e: int
    euler: ClassVar[int] = 1

    def apply_with_map(self, diagram: LinkDiagram) -> Tuple[LinkDiagram, EdgeMap]:
        if not diagram.is_loop(self.e):
            raise InvalidSite(f"Edge {self.e} is not a crossingless loop")
        loops = [loop for loop in diagram.loops if loop != self.e]
        mapping = {e: e for e in diagram.edges if e != self.e}
        return _rebuild(diagram, diagram.crossings, loops, mapping), mapping

    def reverse(self, before: LinkDiagram) -> Move:
        return Birth(self.e, before.colors[before.component_of[self.e]])


@dataclass(frozen=True)
class Dot(Move):
    """A dot on edge ``e``; the diagram is unchanged."""

    e: int

    def apply_with_map(self, diagram: LinkDiagram) -> Tuple[LinkDiagram, EdgeMap]:
        if not diagram.has_edge(self.e):
            raise InvalidSite(f"No edge {self.e} in diagram")
        return diagram, _identity(diagram)

    def reverse(self, before: LinkDiagram) -> Move:
        return self


def apply_move(diagram: LinkDiagram, move: Move) -> LinkDiagram:
    return move.apply(diagram)


@dataclass
class Movie:
    """A start diagram and a sequence of moves, checked by replaying them."""

    start: LinkDiagram
    moves: List[Move]
    frames: List[LinkDiagram] = field(init=False)
    edge_maps: List[EdgeMap] = field(init=False)

    def __post_init__(self) -> None:
        self.moves = list(self.moves)
        self.frames = [self.start]
        self.edge_maps = []
        for index, move in enumerate(self.moves):
            try:
                after, mapping = move.apply_with_map(self.frames[-1])
            except InvalidSite as e:
                raise InvalidMove(f"Move {index} ({move!r}) failed: {e}") from e
            self.frames.append(after)
            self.edge_maps.append(mapping)

    @property
    def end(self) -> LinkDiagram:
        return self.frames[-1]

    def euler(self) -> int:
        """Euler characteristic of the surface traced by the movie."""
        return sum(move.euler for move in self.moves)

    def reversed(self) -> "Movie":
        moves = [
            move.reverse(self.frames[index]) for index, move in reversed(list(enumerate(self.moves)))
        ]
        return Movie(self.end, moves)

    def __len__(self) -> int:
        return len(self.moves)


def contraction_movie(
    cable_diagram: CableDiagram,
    pairing: Sequence[Sequence[Tuple[int, int]]],
    component: int,
    m: int,
    basepoint: Optional[int] = None,
) -> Movie:
    """Movie from D^s to D^s' closing strands m and m+1 of one component.

    A saddle joins the two strands next to ``basepoint`` (a base edge of the
    component, its lowest edge by default) and the resulting cap is pulled
    back along the band by Reidemeister II moves until it dies.
    """
    colors = cable_diagram.colors
    if not 0 <= component < len(colors):
        raise InvalidSite(f"Unknown component {component}; diagram has {len(colors)}")
    if not 1 <= m < colors[component]:
        raise NonAdjacentPair(
            f"Strands ({m}, {m + 1}) are not adjacent strands of a component "
            f"of color {colors[component]}"
        )
    validate_pairing(colors, pairing)
    extended = [list(pairs) for pairs in pairing]
    extended[component].append((m, m + 1))
    validate_pairing(colors, extended)

    start, renaming = sub_cable_map(cable_diagram, pairing)
    if basepoint is None:
        first = cable_diagram.basepoints[(component, m)]
        second = cable_diagram.basepoints[(component, m + 1)]
    else:
        if (basepoint, m) not in cable_diagram.copies:
            raise InvalidSite(f"Edge {basepoint} is not a base edge of component {component}")
        if cable_diagram.strand_of[cable_diagram.copy_of(basepoint, m)][0] != component:
            raise InvalidSite(f"Edge {basepoint} is not on component {component}")
        first = cable_diagram.copy_of(basepoint, m)
        second = cable_diagram.copy_of(basepoint, m + 1)
    e, f = renaming[first], renaming[second]

    moves: List[Move] = [Saddle(e, f)]
    current, mapping = moves[0].apply_with_map(start)
    tip = mapping[e]
    for _ in range(current.n_crossings // 2 + 1):
        if current.is_loop(tip):
            moves.append(Death(tip))
            current = moves[-1].apply(current)
            break
        x1, _ = current.head[tip]
        x2, _ = current.tail[tip]
        try:
            bigon = r2_bigon(current, x1, x2)
        except InvalidSite as err:
            raise MoveValidationFailed(f"Cap on edge {tip} cannot be retracted: {err}") from err
        if tip not in bigon:
            raise MoveValidationFailed(f"Edge {tip} is not on the bigon at {x1}, {x2}")
        move = R2Minus(*sorted((x1, x2)))
        moves.append(move)
        current, mapping = move.apply_with_map(current)
        tip = mapping[tip]
    else:
        raise MoveValidationFailed(f"Cap on edge {tip} did not shrink to a loop")

    expected = sub_cable(cable_diagram, extended)
    if current != expected:
        raise MoveValidationFailed(
            f"Contraction of strands ({m}, {m + 1}) on component {component} ended at "
            f"{current!r}, expected {expected!r}"
        )
    logger.debug(
        "Contraction movie for component %d strands (%d, %d): %d moves",
        component,
        m,
        m + 1,
        len(moves),
    )
    return Movie(start, moves)


__all__ = [
    "EdgeMap",
    "Move",
    "R2Minus",
    "R2Plus",
    "R3",
    "Saddle",
    "Birth",
    "Death",
    "Dot",
    "Movie",
    "apply_move",
    "r2_bigon",
    "r2_minus",
    "r3_triangle",
    "contraction_movie",
]
