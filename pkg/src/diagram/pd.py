"""Planar diagram (PD) codes for oriented, framed, colored links.

A crossing is a 4-tuple of edge ids listed counterclockwise starting from
the incoming under-strand, so the under-strand runs from slot 0 to slot 2.
On a positive crossing the over-strand runs from slot 3 to slot 1; on a
negative crossing it runs from slot 1 to slot 3. Crossingless components
are stored as loop edge ids. Components are ordered by their smallest edge
id, and colors are indexed by that order.
"""

import json
import logging
from functools import cached_property
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

from ..errors import (
    ColorMismatch,
    InputError,
    InvalidSite,
    MalformedPD,
    NonPlanar,
    OrientationInconsistent,
    UnknownComponent,
)

logger = logging.getLogger(__name__)

Slot = Tuple[int, int]
PDTuple = Tuple[int, int, int, int]

KNOT_TABLE = Path(__file__).with_name("knots.json")

# Slot pairs joined when a crossing is removed: straight through, or the
# 0- and 1-smoothings.
STRAIGHT: Tuple[Slot, Slot] = ((0, 2), (1, 3))
SMOOTHINGS: Tuple[Tuple[Slot, Slot], Tuple[Slot, Slot]] = (((0, 1), (2, 3)), ((0, 3), (1, 2)))


def is_incoming(sign: int, position: int) -> bool:
    """Whether the edge at ``position`` of a crossing with ``sign`` enters it."""
    if position == 0:
        return True
    if position == 2:
        return False
    if position == 3:
        return sign > 0
    return sign < 0


class LinkDiagram:
    """A validated oriented link diagram with blackboard framing and colors."""

    def __init__(
        self,
        crossings: Sequence[Sequence[int]],
        signs: Sequence[int],
        loops: Iterable[int] = (),
        colors: Optional[Union[Sequence[int], Mapping[int, int]]] = None,
    ):
        if len(crossings) != len(signs):
            raise MalformedPD(
                f"{len(crossings)} crossings but {len(signs)} signs"
            )
        parsed: List[PDTuple] = []
        for index, crossing in enumerate(crossings):
            if len(crossing) != 4 or not all(isinstance(e, int) for e in crossing):
                raise MalformedPD(f"Crossing {index} is not a 4-tuple of edge ids: {crossing}")
            parsed.append(tuple(crossing))  # type: ignore[arg-type]
        for index, sign in enumerate(signs):
            if sign not in (1, -1):
                raise MalformedPD(f"Invalid sign for crossing {index}: {sign}. Must be +1 or -1")
        self.crossings: Tuple[PDTuple, ...] = tuple(parsed)
        self.signs: Tuple[int, ...] = tuple(int(s) for s in signs)
        self.loops: Tuple[int, ...] = tuple(sorted(loops))
        if len(set(self.loops)) != len(self.loops):
            raise MalformedPD(f"Repeated loop ids: {self.loops}")

        self._validate_edges()
        self._validate_planarity()
        self.components: Tuple[Tuple[int, ...], ...] = self._trace_components()
        self.component_of: Dict[int, int] = {
            edge: index for index, component in enumerate(self.components) for edge in component
        }
        self.colors: Tuple[int, ...] = self._normalize_colors(colors)

    # Validation

    def _validate_edges(self) -> None:
        slots: Dict[int, List[Slot]] = {}
        for x, crossing in enumerate(self.crossings):
            for p, edge in enumerate(crossing):
                slots.setdefault(edge, []).append((x, p))
        for edge, where in slots.items():
            if len(where) != 2:
                raise MalformedPD(f"Edge {edge} appears {len(where)} times; expected 2")
        clash = set(self.loops) & set(slots)
        if clash:
            raise MalformedPD(f"Loop ids {sorted(clash)} also label crossing edges")

        self.head: Dict[int, Slot] = {}
        self.tail: Dict[int, Slot] = {}
        for edge, where in slots.items():
            ends = {is_incoming(self.signs[x], p): (x, p) for x, p in where}
            if len(ends) != 2:
                raise OrientationInconsistent(
                    f"Edge {edge} must enter one crossing and leave another; found {where}"
                )
            self.head[edge] = ends[True]
            self.tail[edge] = ends[False]

    def _validate_planarity(self) -> None:
        count = len(self.crossings)
        if not count:
            return
        faces = 0
        seen: Set[Slot] = set()
        for start in ((x, p) for x in range(count) for p in range(4)):
            if start in seen:
                continue
            faces += 1
            dart = start
            while dart not in seen:
                seen.add(dart)
                dart = self._next_face_dart(dart)
        expected = count + 2 * self._connected_pieces()
        if faces != expected:
            raise NonPlanar(
                f"Diagram has {faces} faces; a planar diagram with {count} crossings has {expected}"
            )

    def _partner(self, slot: Slot) -> Slot:
        edge = self.crossings[slot[0]][slot[1]]
        head, tail = self.head[edge], self.tail[edge]
        return tail if slot == head else head

    def _next_face_dart(self, dart: Slot) -> Slot:
        x, p = self._partner(dart)
        return (x, (p + 1) % 4)

    def face(self, dart: Slot) -> List[Slot]:
        """Darts around the face to the left of ``dart``, starting with it."""
        darts = [dart]
        current = self._next_face_dart(dart)
        while current != dart:
            darts.append(current)
            current = self._next_face_dart(current)
        return darts

    def _connected_pieces(self) -> int:
        parent = list(range(len(self.crossings)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for edge in self.head:
            a, b = find(self.head[edge][0]), find(self.tail[edge][0])
            if a != b:
                parent[a] = b
        return len({find(x) for x in range(len(self.crossings))})

    def _trace_components(self) -> Tuple[Tuple[int, ...], ...]:
        visited: Set[int] = set()
        components: List[Tuple[int, ...]] = []
        for start in sorted(list(self.head) + list(self.loops)):
            if start in visited:
                continue
            if start in self.loops:
                visited.add(start)
                components.append((start,))
                continue
            path = []
            edge = start
            while edge not in visited:
                visited.add(edge)
                path.append(edge)
                x, p = self.head[edge]
                edge = self.crossings[x][(p + 2) % 4]
            components.append(tuple(path))
        return tuple(components)

    def _normalize_colors(
        self, colors: Optional[Union[Sequence[int], Mapping[int, int]]]
    ) -> Tuple[int, ...]:
        result = [1] * len(self.components)
        if colors is None:
            return tuple(result)
        items = colors.items() if isinstance(colors, Mapping) else enumerate(colors)
        for index, color in items:
            index = int(index)
            if not 0 <= index < len(self.components):
                raise UnknownComponent(
                    f"Color given for component {index}; diagram has {len(self.components)}"
                )
            if not isinstance(color, int) or color < 0:
                raise MalformedPD(f"Invalid color for component {index}: {color}")
            result[index] = color
        return tuple(result)

    def resolution_circles(self, state: Sequence[int]) -> List[Tuple[int, ...]]:
        """Circles of the resolution ``state`` (one bit per crossing).

        Each circle is the sorted tuple of its edges; circles are ordered by
        their smallest edge.
        """
        if len(state) != len(self.crossings):
            raise MalformedPD(f"State has {len(state)} bits for {len(self.crossings)} crossings")
        parent: Dict[int, int] = {edge: edge for edge in self.edges}

        def find(edge: int) -> int:
            while parent[edge] != edge:
                parent[edge] = parent[parent[edge]]
                edge = parent[edge]
            return edge

        for crossing, bit in zip(self.crossings, state):
            for p, r in SMOOTHINGS[bit]:
                a, b = find(crossing[p]), find(crossing[r])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        circles: Dict[int, List[int]] = {}
        for edge in self.edges:
            circles.setdefault(find(edge), []).append(edge)
        return [tuple(circles[root]) for root in sorted(circles)]

    # Queries

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @cached_property
    def edges(self) -> Tuple[int, ...]:
        return tuple(sorted(list(self.head) + list(self.loops)))

    def max_edge(self) -> int:
        return max(self.edges, default=0)

    def is_loop(self, edge: int) -> bool:
        return edge in self.loops

    def has_edge(self, edge: int) -> bool:
        return edge in self.head or edge in self.loops

    def under_component(self, x: int) -> int:
        return self.component_of[self.crossings[x][0]]

    def over_component(self, x: int) -> int:
        return self.component_of[self.crossings[x][1]]

    def writhe(self) -> int:
        return sum(self.signs)

    def component_writhe(self, component: int) -> int:
        """Sum of signs of self-crossings of one component (its blackboard framing)."""
        self._require_component(component)
        return sum(
            sign
            for x, sign in enumerate(self.signs)
            if self.under_component(x) == component == self.over_component(x)
        )

    def linking_number(self, first: int, second: int) -> int:
        self._require_component(first)
        self._require_component(second)
        if first == second:
            raise UnknownComponent("Linking number needs two distinct components")
        total = sum(
            sign
            for x, sign in enumerate(self.signs)
            if {self.under_component(x), self.over_component(x)} == {first, second}
        )
        return total // 2

    def _require_component(self, component: int) -> None:
        if not 0 <= component < len(self.components):
            raise UnknownComponent(
                f"Unknown component {component}; diagram has {len(self.components)}"
            )

    def with_colors(self, colors: Union[Sequence[int], Mapping[int, int]]) -> "LinkDiagram":
        return LinkDiagram(self.crossings, self.signs, self.loops, colors)

    # Serialization and comparison

    def to_json(self) -> Dict:
        return {
            "crossings": [list(c) for c in self.crossings],
            "signs": list(self.signs),
            "loops": list(self.loops),
            "colors": {str(i): c for i, c in enumerate(self.colors)},
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return (
            self.crossings == other.crossings
            and self.signs == other.signs
            and self.loops == other.loops
            and self.colors == other.colors
        )

    def __hash__(self) -> int:
        return hash((self.crossings, self.signs, self.loops, self.colors))

    def __repr__(self) -> str:
        return (
            f"LinkDiagram(crossings={len(self.crossings)}, components={len(self.components)}, "
            f"writhe={self.writhe()})"
        )


def diagram_from_dict(data: Mapping) -> LinkDiagram:
    """Build a diagram from decoded PD JSON."""
    if not isinstance(data, Mapping):
        raise MalformedPD("PD code must be a JSON object")
    crossings = data.get("crossings", [])
    signs = data.get("signs", [])
    if not isinstance(crossings, list) or not isinstance(signs, list):
        raise MalformedPD("'crossings' and 'signs' must be lists")
    used = [e for c in crossings if isinstance(c, list) for e in c if isinstance(e, int)]
    loops_field = data.get("loops", [])
    if isinstance(loops_field, bool) or not isinstance(loops_field, (int, list)):
        raise MalformedPD(f"Invalid 'loops' field: {loops_field!r}")
    if isinstance(loops_field, int):
        if loops_field < 0:
            raise MalformedPD(f"Invalid loop count: {loops_field}")
        first = max(used, default=0) + 1
        loops = list(range(first, first + loops_field))
    else:
        loops = loops_field
    colors = data.get("colors")
    if colors is not None and not isinstance(colors, (Mapping, list)):
        raise MalformedPD("'colors' must be an object or a list")
    if not all(isinstance(e, int) and not isinstance(e, bool) for e in loops):
        raise MalformedPD(f"Loop ids must be integers: {loops!r}")
    try:
        return LinkDiagram(crossings, signs, loops, colors)
    except InputError:
        raise
    except (TypeError, ValueError) as e:
        raise MalformedPD(str(e)) from e


def parse_pd(text: str) -> LinkDiagram:
    """Parse PD-code JSON text into a validated diagram."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedPD(f"Invalid JSON: {e}") from e
    diagram = diagram_from_dict(data)
    logger.debug("Parsed %r", diagram)
    return diagram


def _knot_table() -> Dict[str, Dict]:
    with open(KNOT_TABLE, "r") as f:
        return json.load(f)


def knot_names() -> List[str]:
    return list(_knot_table())


def load_knot(name: str) -> LinkDiagram:
    table = _knot_table()
    if name not in table:
        raise MalformedPD(f"Unknown knot: {name}. Must be one of {list(table)}")
    return diagram_from_dict(table[name])


def writhe(diagram: LinkDiagram) -> int:
    return diagram.writhe()


def linking_number(diagram: LinkDiagram, first: int, second: int) -> int:
    return diagram.linking_number(first, second)


def _join_edges(
    diagram: LinkDiagram,
    removed: Mapping[int, Sequence[Tuple[int, int]]],
    dropped_edges: Iterable[int] = (),
) -> Tuple[LinkDiagram, Dict[int, int]]:
    """Delete crossings, joining the given slot pairs of each removed crossing."""
    dropped = set(dropped_edges)
    parent: Dict[int, int] = {edge: edge for edge in diagram.edges}

    def find(edge: int) -> int:
        while parent[edge] != edge:
            parent[edge] = parent[parent[edge]]
            edge = parent[edge]
        return edge

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb

    for x, joins in removed.items():
        crossing = diagram.crossings[x]
        for p, r in joins:
            union(crossing[p], crossing[r])

    dead_classes = {find(edge) for edge in dropped}
    crossings = []
    signs = []
    for x, crossing in enumerate(diagram.crossings):
        if x in removed:
            continue
        renamed = tuple(find(e) for e in crossing)
        if any(r in dead_classes for r in renamed):
            raise MalformedPD(f"Crossing {x} touches a dropped strand but was not removed")
        crossings.append(renamed)
        signs.append(diagram.signs[x])
    used = {e for crossing in crossings for e in crossing}
    loops = sorted(
        {find(edge) for edge in diagram.edges} - used - dead_classes
    )
    mapping = {
        edge: find(edge) for edge in diagram.edges if find(edge) not in dead_classes
    }
    result = LinkDiagram(crossings, signs, loops)
    return result.with_colors(inherit_colors(diagram, result, mapping)), mapping


def collapse_crossings(
    diagram: LinkDiagram,
    removed: Iterable[int],
    dropped_edges: Iterable[int] = (),
) -> Tuple[LinkDiagram, Dict[int, int]]:
    """Delete crossings, joining the edges that ran straight through them.

    Joined edges are renamed to the smallest id in their class. Classes
    containing a dropped edge disappear; classes left without crossings
    become loops. Returns the new diagram and the old-to-new edge map for
    surviving edges.
    """
    return _join_edges(diagram, {x: STRAIGHT for x in set(removed)}, dropped_edges)


def smooth_crossing(diagram: LinkDiagram, x: int) -> Tuple[LinkDiagram, Dict[int, int]]:
    """The orientation-respecting smoothing of crossing ``x``."""
    if not 0 <= x < diagram.n_crossings:
        raise InvalidSite(f"No crossing {x}; diagram has {diagram.n_crossings}")
    bit = 0 if diagram.signs[x] > 0 else 1
    return _join_edges(diagram, {x: SMOOTHINGS[bit]})


def switch_crossing(diagram: LinkDiagram, x: int) -> LinkDiagram:
    """Exchange over and under strands at crossing ``x``."""
    if not 0 <= x < diagram.n_crossings:
        raise InvalidSite(f"No crossing {x}; diagram has {diagram.n_crossings}")
    crossings = list(diagram.crossings)
    signs = list(diagram.signs)
    a, b, c, d = crossings[x]
    crossings[x] = (d, a, b, c) if signs[x] > 0 else (b, c, d, a)
    signs[x] = -signs[x]
    return LinkDiagram(crossings, signs, diagram.loops, diagram.colors)


def inherit_colors(
    old: LinkDiagram, new: LinkDiagram, mapping: Mapping[int, int], default: int = 1
) -> List[int]:
    """Colors of ``new`` components read off the old components mapped into them."""
    found: Dict[int, Set[int]] = {}
    for old_edge, new_edge in mapping.items():
        if new.has_edge(new_edge):
            found.setdefault(new.component_of[new_edge], set()).add(
                old.colors[old.component_of[old_edge]]
            )
    colors = []
    for index in range(new.n_components):
        values = found.get(index, {default})
        if len(values) > 1:
            raise ColorMismatch(f"Component {index} joins strands of colors {sorted(values)}")
        colors.append(values.pop())
    return colors


def diagram_isomorphism(first: LinkDiagram, second: LinkDiagram) -> Optional[Dict[int, int]]:
    """Edge renaming taking ``first`` to ``second`` with crossing order kept, if any.

    Loops are matched by equal id first, the rest in sorted order.
    """
    if first.signs != second.signs or len(first.loops) != len(second.loops):
        return None
    mapping: Dict[int, int] = {}
    for left, right in zip(first.crossings, second.crossings):
        for a, b in zip(left, right):
            if mapping.setdefault(a, b) != b:
                return None
    if len(set(mapping.values())) != len(mapping):
        return None
    shared = set(first.loops) & set(second.loops)
    for loop in shared:
        mapping[loop] = loop
    rest_first = [e for e in first.loops if e not in shared]
    rest_second = [e for e in second.loops if e not in shared]
    mapping.update(zip(rest_first, rest_second))
    if len(set(mapping.values())) != len(mapping):
        return None
    return mapping


def add_kink(diagram: LinkDiagram, edge: int, sign: int) -> LinkDiagram:
    """Insert a curl of the given sign on ``edge`` (changes framing by ``sign``)."""
    if sign not in (1, -1):
        raise MalformedPD(f"Invalid kink sign: {sign}. Must be +1 or -1")
    if not diagram.has_edge(edge):
        raise InvalidSite(f"No edge {edge} in diagram")
    top = diagram.max_edge()
    crossings = [list(c) for c in diagram.crossings]
    loops = list(diagram.loops)
    curl = top + 2
    if diagram.is_loop(edge):
        loops.remove(edge)
        rest = edge
    else:
        rest = top + 1
        x, p = diagram.head[edge]
        crossings[x][p] = rest
    if sign > 0:
        crossings.append([edge, rest, curl, curl])
    else:
        crossings.append([edge, curl, curl, rest])
    signs = list(diagram.signs) + [sign]
    result = LinkDiagram(crossings, signs, loops)
    mapping = {e: e for e in diagram.edges}
    return result.with_colors(inherit_colors(diagram, result, mapping))


def reverse_component(diagram: LinkDiagram, component: int) -> LinkDiagram:
    """Reverse the orientation of one component."""
    diagram._require_component(component)
    crossings = []
    signs = []
    for x, crossing in enumerate(diagram.crossings):
        under = diagram.under_component(x) == component
        over = diagram.over_component(x) == component
        a, b, c, d = crossing
        crossings.append((c, d, a, b) if under else crossing)
        sign = diagram.signs[x]
        signs.append(sign if under == over else -sign)
    result = LinkDiagram(crossings, signs, diagram.loops)
    return result.with_colors(
        inherit_colors(diagram, result, {e: e for e in diagram.edges})
    )



def braid_closure(word: Sequence[int], strands: Optional[int] = None) -> LinkDiagram:
    """Closure of a braid with strands running upwards.

    Letter ``i`` crosses positions i and i + 1 positively, ``-i`` negatively;
    positions are 1-based from the left. Strands of the closure keep the
    braid orientation.
    """
    if any(letter == 0 for letter in word):
        raise MalformedPD("Braid letters must be nonzero")
    width = strands if strands is not None else max((abs(a) for a in word), default=0) + 1
    if any(abs(a) >= width for a in word):
        raise MalformedPD(f"Braid word {list(word)} needs more than {width} strands")
    current = list(range(1, width + 1))
    fresh = width + 1
    crossings: List[List[int]] = []
    signs: List[int] = []
    for letter in word:
        i = abs(letter) - 1
        bottom_left, bottom_right = current[i], current[i + 1]
        top_left, top_right = fresh, fresh + 1
        fresh += 2
        if letter > 0:
            crossings.append([bottom_right, top_right, top_left, bottom_left])
        else:
            crossings.append([bottom_left, bottom_right, top_right, top_left])
        signs.append(1 if letter > 0 else -1)
        current[i], current[i + 1] = top_left, top_right

    closing = {current[p]: p + 1 for p in range(width) if current[p] != p + 1}
    crossings = [[closing.get(e, e) for e in c] for c in crossings]
    used = sorted({e for c in crossings for e in c})
    loops = [p + 1 for p in range(width) if current[p] == p + 1]
    compact = {e: n for n, e in enumerate(sorted(set(used) | set(loops)), start=1)}
    return LinkDiagram(
        [[compact[e] for e in c] for c in crossings], signs, [compact[e] for e in loops]
    )


__all__ = [
    "KNOT_TABLE",
    "LinkDiagram",
    "is_incoming",
    "parse_pd",
    "diagram_from_dict",
    "knot_names",
    "load_knot",
    "writhe",
    "linking_number",
    "STRAIGHT",
    "SMOOTHINGS",
    "collapse_crossings",
    "smooth_crossing",
    "switch_crossing",
    "inherit_colors",
    "diagram_isomorphism",
    "add_kink",
    "reverse_component",
    "braid_closure",
]
