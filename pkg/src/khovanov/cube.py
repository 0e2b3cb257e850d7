"""The Khovanov cube of resolutions.

A generator is labelled ``(state, labels)``: ``state`` is a bitmask over the
crossings (bit ``x`` is the smoothing of crossing ``x``) and ``labels`` has
one entry per circle of that resolution, in the order returned by
:meth:`LinkDiagram.resolution_circles`. Label ``ONE`` is the unit of the
Frobenius algebra (q-degree +1) and ``X`` its generator (q-degree -1).

In marked mode a set of edges is fixed in place. A resolution in which two
marked edges share a circle contributes nothing; a circle through a marked
edge is pinned to ``ONE``, carries no q-degree, and any edge map that would
put ``X`` on it is zero.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..algebra import ChainComplex, FieldTag
from ..algebra.chain import Degree, Key
from ..diagram import LinkDiagram
from ..errors import InvalidSite, InvariantViolation

logger = logging.getLogger(__name__)

Circle = Tuple[int, ...]
Labels = Tuple[int, ...]
Generator = Tuple[int, Labels]

ONE = 0
X = 1


class FrobeniusAlgebra:
    """A = k[X]/(X^2) with counit eps(X) = 1."""

    @staticmethod
    def degree(label: int) -> int:
        return 1 if label == ONE else -1

    @staticmethod
    def multiply(a: int, b: int) -> Optional[int]:
        if a == X and b == X:
            return None
        return X if X in (a, b) else ONE

    @staticmethod
    def comultiply(a: int) -> List[Tuple[int, int]]:
        if a == ONE:
            return [(ONE, X), (X, ONE)]
        return [(X, X)]

    @staticmethod
    def unit() -> int:
        return ONE

    @staticmethod
    def counit(a: int) -> int:
        return 1 if a == X else 0

    @staticmethod
    def times_x(a: int) -> Optional[int]:
        return X if a == ONE else None


FROBENIUS = FrobeniusAlgebra()


def state_bits(state: int, n_crossings: int) -> Tuple[int, ...]:
    return tuple((state >> x) & 1 for x in range(n_crossings))


def cube_sign(state: int, crossing: int) -> int:
    """(-1) to the number of 1-smoothings before ``crossing``."""
    return -1 if bin(state & ((1 << crossing) - 1)).count("1") % 2 else 1


def _degree(diagram: LinkDiagram, marked: FrozenSet[int], state: int, labels: Labels) -> Degree:
    height = bin(state).count("1")
    weight = sum(FROBENIUS.degree(a) for c, a in enumerate(labels) if c not in marked)
    return height - diagram.n_minus, weight + height + diagram.n_plus - 2 * diagram.n_minus


def _labellings(n_circles: int, marked: FrozenSet[int]) -> List[Labels]:
    choices = [(ONE,) if c in marked else (ONE, X) for c in range(n_circles)]
    return list(itertools.product(*choices))


@dataclass(frozen=True)
class CircleMatch:
    """How the circles of one resolution become those of another.

    ``fixed`` sends untouched source circles to target circles; ``sources``
    and ``targets`` are the circles that merge, split, appear or vanish.
    """

    fixed: Mapping[int, int]
    sources: Tuple[int, ...]
    targets: Tuple[int, ...]

    @property
    def kind(self) -> str:
        shape = (len(self.sources), len(self.targets))
        kinds = {(0, 0): "identity", (2, 1): "merge", (1, 2): "split", (0, 1): "birth", (1, 0): "death"}
        if shape not in kinds:
            raise InvariantViolation(f"Circles change as {shape[0]} -> {shape[1]}")
        return kinds[shape]

    def transfer(self, labels: Labels, n_target: int) -> List[Labels]:
        """Target labellings, each with coefficient 1, of the TQFT map on ``labels``."""
        base: List[Optional[int]] = [None] * n_target
        for s, t in self.fixed.items():
            base[t] = labels[s]
        moving = [labels[s] for s in self.sources]
        kind = self.kind
        if kind == "merge":
            product = FROBENIUS.multiply(*moving)
            local: List[Tuple[int, ...]] = [] if product is None else [(product,)]
        elif kind == "split":
            local = list(FROBENIUS.comultiply(moving[0]))
        elif kind == "birth":
            local = [(FROBENIUS.unit(),)]
        elif kind == "death":
            local = [()] if FROBENIUS.counit(moving[0]) else []
        else:
            local = [()]
        results = []
        for values in local:
            full = list(base)
            for t, value in zip(self.targets, values):
                full[t] = value
            results.append(tuple(full))  # type: ignore[arg-type]
        return results


def match_circles(
    source: Sequence[Circle],
    target: Sequence[Circle],
    mapping: Mapping[int, int],
    source_moving: Iterable[int] = (),
    target_moving: Iterable[int] = (),
) -> CircleMatch:
    """Pair up circles whose edge sets agree under ``mapping``.

    Circles through ``source_moving`` (resp. ``target_moving``) edges are the
    ones the move acts on; every other source circle must reappear intact.
    """
    source_moving = set(source_moving)
    target_moving = set(target_moving)
    moving_s = tuple(s for s, circle in enumerate(source) if source_moving.intersection(circle))
    moving_t = tuple(t for t, circle in enumerate(target) if target_moving.intersection(circle))
    index: Dict[FrozenSet[int], int] = {
        frozenset(circle): t for t, circle in enumerate(target) if t not in moving_t
    }
    fixed: Dict[int, int] = {}
    for s, circle in enumerate(source):
        if s in moving_s:
            continue
        image = frozenset(mapping[e] for e in circle if e in mapping)
        t = index.get(image)
        if t is None:
            raise InvariantViolation(f"Circle {circle} has no counterpart after the move")
        fixed[s] = t
    if len(fixed) + len(moving_t) != len(target):
        raise InvariantViolation("Target circles are not covered by the circle match")
    return CircleMatch(fixed, moving_s, moving_t)


@dataclass(frozen=True, eq=False)
class KhovanovCube:
    """The Khovanov complex of a diagram together with its generator bookkeeping."""

    diagram: LinkDiagram
    field: FieldTag
    marked: Tuple[int, ...]
    circles: Mapping[int, Tuple[Circle, ...]]
    marked_circles: Mapping[int, FrozenSet[int]]
    complex: ChainComplex

    @property
    def n_crossings(self) -> int:
        return self.diagram.n_crossings

    def has_state(self, state: int) -> bool:
        return state in self.circles

    def states(self) -> List[int]:
        return sorted(self.circles)

    def degree(self, state: int, labels: Labels) -> Degree:
        return _degree(self.diagram, self.marked_circles[state], state, labels)

    def labellings(self, state: int) -> List[Labels]:
        return _labellings(len(self.circles[state]), self.marked_circles[state])

    def key(self, state: int, labels: Labels) -> Optional[Key]:
        """Key of a generator, or None if it is not part of the complex."""
        if state not in self.circles:
            return None
        marked = self.marked_circles[state]
        if any(labels[c] != ONE for c in marked):
            return None
        i, j = self.degree(state, labels)
        if not self.complex.has_label(i, j, (state, labels)):
            return None
        return self.complex.key_of(i, j, (state, labels))

    def generator(self, key: Key) -> Generator:
        return self.complex.label(key)  # type: ignore[return-value]

    def circle_at(self, state: int, edge: int) -> int:
        for c, circle in enumerate(self.circles[state]):
            if edge in circle:
                return c
        raise InvalidSite(f"Edge {edge} is on no circle of state {state}")

    def __repr__(self) -> str:
        return f"KhovanovCube({self.diagram!r}, {self.field.value}, marked={self.marked})"


def _edge_images(cube_circles, state: int, diagram: LinkDiagram):
    """Yield (target state, sign, CircleMatch) for every cube edge leaving ``state``."""
    for x in range(diagram.n_crossings):
        if (state >> x) & 1:
            continue
        target = state | (1 << x)
        if target not in cube_circles:
            continue
        crossing_edges = diagram.crossings[x]
        match = match_circles(
            cube_circles[state],
            cube_circles[target],
            {e: e for e in diagram.edges},
            crossing_edges,
            crossing_edges,
        )
        yield target, cube_sign(state, x), match


def khovanov_cube(
    diagram: LinkDiagram,
    field: FieldTag,
    marked: Optional[Iterable[int]] = None,
) -> KhovanovCube:
    """Build (and cache) the cube of ``diagram`` over ``field``."""
    return _cached_cube(diagram, field, tuple(sorted(set(marked or ()))))


@lru_cache(maxsize=64)
def _cached_cube(diagram: LinkDiagram, field: FieldTag, marked: Tuple[int, ...]) -> KhovanovCube:
    for edge in marked:
        if not diagram.has_edge(edge):
            raise InvalidSite(f"Marked edge {edge} is not in the diagram")
    n = diagram.n_crossings
    marked_set = set(marked)
    circles: Dict[int, Tuple[Circle, ...]] = {}
    marked_circles: Dict[int, FrozenSet[int]] = {}
    for state in range(1 << n):
        found = tuple(diagram.resolution_circles(state_bits(state, n)))
        hits = [len(marked_set.intersection(circle)) for circle in found]
        if any(h > 1 for h in hits):
            continue
        circles[state] = found
        marked_circles[state] = frozenset(c for c, h in enumerate(hits) if h)

    terms: Dict[Degree, List[Generator]] = {}
    for state in sorted(circles):
        for labels in _labellings(len(circles[state]), marked_circles[state]):
            degree = _degree(diagram, marked_circles[state], state, labels)
            terms.setdefault(degree, []).append((state, labels))
    index = {
        label: (i, j, k) for (i, j), labels in terms.items() for k, label in enumerate(labels)
    }

    differential: Dict[Key, Dict[Key, int]] = {}
    for state in sorted(circles):
        edges = list(_edge_images(circles, state, diagram))
        for labels in _labellings(len(circles[state]), marked_circles[state]):
            image: Dict[Key, int] = {}
            for target, sign, match in edges:
                for new in match.transfer(labels, len(circles[target])):
                    key = index.get((target, new))
                    if key is None:
                        continue
                    image[key] = image.get(key, 0) + sign
            reduced = {key: field.reduce(value) for key, value in image.items()}
            reduced = {key: value for key, value in reduced.items() if value}
            if reduced:
                differential[index[(state, labels)]] = reduced

    name = f"C({diagram!r})" if not marked else f"C~({diagram!r})"
    complex_ = ChainComplex.trusted(field, terms, differential, name=name)
    logger.debug(
        "Cube of %r: %d of %d resolutions, %d generators",
        diagram,
        len(circles),
        1 << n,
        complex_.total_dim(),
    )
    return KhovanovCube(diagram, field, marked, circles, marked_circles, complex_)


def khovanov_complex(
    diagram: LinkDiagram, field: FieldTag, marked: Optional[Iterable[int]] = None
) -> ChainComplex:
    """C(D) over ``field``; with ``marked`` edges, the marked-cube quotient."""
    return khovanov_cube(diagram, field, marked).complex


__all__ = [
    "ONE",
    "X",
    "Circle",
    "Labels",
    "Generator",
    "FrobeniusAlgebra",
    "FROBENIUS",
    "CircleMatch",
    "match_circles",
    "state_bits",
    "cube_sign",
    "KhovanovCube",
    "khovanov_cube",
    "khovanov_complex",
]
