"""Chain maps induced by births, deaths, saddles and dots.

Maps act on sparse vectors of the source cube and are wrapped as
:class:`ChainMap` on demand. The crossings of the diagram are untouched by
these moves, so a generator keeps its resolution and only its circle labels
change.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple

from ..algebra import ChainMap, accumulate
from ..algebra.chain import Degree, Key, Vector
from ..diagram import Birth, Death, Dot, Move, R2Minus, R2Plus, R3, Saddle
from ..errors import InvalidMove, InvalidSite
from ..khovanov import FROBENIUS, KhovanovCube, khovanov_cube, match_circles

logger = logging.getLogger(__name__)

EdgeMap = Mapping[int, int]


@dataclass(frozen=True, eq=False)
class CobordismMap:
    """A chain map between two cube complexes, applied to whole vectors."""

    source: KhovanovCube
    target: KhovanovCube
    bidegree: Degree
    run: Callable[[Vector], Vector]
    name: str = ""

    def apply(self, vector: Mapping[Key, object]) -> Vector:
        return self.run(dict(vector))  # type: ignore[arg-type]

    def chain_map(self) -> ChainMap:
        return ChainMap(
            self.source.complex,
            self.target.complex,
            self.bidegree,
            func=lambda key: self.run({key: 1}),
            name=self.name,
        )

    def then(self, after: "CobordismMap") -> "CobordismMap":
        """``after`` o ``self``."""
        if after.source is not self.target:
            raise InvalidMove(f"Cannot compose {self.name} with {after.name}: cubes differ")
        bidegree = (self.bidegree[0] + after.bidegree[0], self.bidegree[1] + after.bidegree[1])
        return CobordismMap(
            self.source,
            after.target,
            bidegree,
            lambda vector: after.run(self.run(vector)),
            f"{after.name}*{self.name}" if self.name else after.name,
        )

    @classmethod
    def identity(cls, cube: KhovanovCube) -> "CobordismMap":
        return cls(cube, cube, (0, 0), dict, "id")

    def check(self, limit: Optional[int] = None) -> None:
        """Raise unless d f = f d on (at most ``limit``) generators."""
        self.chain_map().check(limit)


def moved_marks(marked: Iterable[int], mapping: EdgeMap) -> Tuple[int, ...]:
    """Marked edges after a move; a mark on a vanishing edge is an error."""
    result = []
    for edge in marked:
        if edge not in mapping:
            raise InvalidMove(f"Move removes marked edge {edge}")
        result.append(mapping[edge])
    return tuple(sorted(set(result)))


def _local_map(
    source: KhovanovCube,
    target: KhovanovCube,
    mapping: EdgeMap,
    source_moving: Iterable[int],
    target_moving: Iterable[int],
    bidegree: Degree,
    name: str,
    dot: Optional[int] = None,
) -> CobordismMap:
    if source.n_crossings != target.n_crossings:
        raise InvalidMove(f"{name} changes the crossings of the diagram")
    source_moving = tuple(e for e in source_moving if source.diagram.has_edge(e))
    target_moving = tuple(e for e in target_moving if target.diagram.has_edge(e))
    field = source.field
    images: Dict[Key, Vector] = {}

    def image(key: Key) -> Vector:
        if key in images:
            return images[key]
        state, labels = source.generator(key)
        result: Vector = {}
        if target.has_state(state):
            match = match_circles(
                source.circles[state], target.circles[state], mapping, source_moving, target_moving
            )
            for new in match.transfer(labels, len(target.circles[state])):
                if dot is not None:
                    c = target.circle_at(state, dot)
                    value = FROBENIUS.times_x(new[c])
                    if value is None:
                        continue
                    new = new[:c] + (value,) + new[c + 1:]
                hit = target.key(state, new)
                if hit is not None:
                    accumulate(field, result, {hit: 1})
        images[key] = result
        return result

    def run(vector: Vector) -> Vector:
        result: Vector = {}
        for key, value in vector.items():
            accumulate(field, result, image(key), value)
        return result

    return CobordismMap(source, target, bidegree, run, name)


def relabel_map(source: KhovanovCube, target: KhovanovCube, mapping: EdgeMap) -> CobordismMap:
    """The isomorphism between cubes of diagrams that differ by an edge renaming."""
    return _local_map(source, target, mapping, (), (), (0, 0), "relabel")


def elementary_map(
    move: Move,
    source: KhovanovCube,
    target: Optional[KhovanovCube] = None,
    mapping: Optional[EdgeMap] = None,
) -> CobordismMap:
    """The chain map of one move starting at ``source``.

    Births and deaths have bidegree (0, 1), saddles (0, -1) and dots
    (0, -2). Reidemeister moves are delegated to the elimination-based
    equivalences.
    """
    if isinstance(move, (R2Minus, R2Plus, R3)):
        from .reidemeister import reidemeister_equivalence

        return reidemeister_equivalence(move, source, target).forward

    if mapping is None or target is None:
        try:
            after, mapping = move.apply_with_map(source.diagram)
        except InvalidSite as e:
            raise InvalidMove(f"{move!r} does not apply: {e}") from e
        if target is None:
            target = khovanov_cube(after, source.field, moved_marks(source.marked, mapping))

    if isinstance(move, Saddle):
        ends = (move.e, move.f)
        return _local_map(
            source,
            target,
            mapping,
            ends,
            tuple(mapping.get(e, e) for e in ends),
            (0, -1),
            repr(move),
        )
    if isinstance(move, Birth):
        return _local_map(source, target, mapping, (), (move.e,), (0, 1), repr(move))
    if isinstance(move, Death):
        return _local_map(source, target, mapping, (move.e,), (), (0, 1), repr(move))
    if isinstance(move, Dot):
        return _local_map(source, target, mapping, (), (), (0, -2), repr(move), dot=mapping[move.e])

    raise InvalidMove(f"No chain map for move {move!r}")


__all__ = ["CobordismMap", "elementary_map", "moved_marks", "relabel_map"]
