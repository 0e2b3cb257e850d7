"""Choosing arrow signs so that every square anticommutes.

Each square of arrows either commutes or anticommutes once the maps are
computed; flipping the sign of an arrow toggles every square containing
it. The flips form a linear system over F2.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..algebra import FieldTag, gf2_solve
from ..algebra.chain import Key, Vector
from ..errors import InconsistentSquares, NonProportionalSquare

logger = logging.getLogger(__name__)

Arrow = Hashable
SignAssignment = Dict[Arrow, int]


@dataclass(frozen=True)
class Square:
    """Two paths ``first`` and ``second`` of two arrows each between the same corners.

    ``relation`` is +1 when the composites agree, -1 when they are
    opposite, and None when both vanish.
    """

    first: Tuple[Arrow, Arrow]
    second: Tuple[Arrow, Arrow]
    relation: Optional[int]


def square_relation(
    field: FieldTag,
    first: Mapping[Key, Vector],
    second: Mapping[Key, Vector],
) -> Optional[int]:
    """Compare two composites given by their images on a basis."""
    keys = set(first) | set(second)
    a = {k: first.get(k, {}) for k in keys if first.get(k)}
    b = {k: second.get(k, {}) for k in keys if second.get(k)}
    if not a and not b:
        return None
    if a == b:
        return 1
    negated = {k: {t: field.reduce(-v) for t, v in image.items()} for k, image in b.items()}
    if a == negated:
        return -1
    raise NonProportionalSquare("Composites around a square are neither equal nor opposite")


def solve_satisfactory_signs(arrows: Sequence[Arrow], squares: Iterable[Square]) -> SignAssignment:
    """Signs making every constrained square anticommute.

    Relations are those of the unsigned maps. Squares with relation None
    impose nothing.
    """
    index = {arrow: position for position, arrow in enumerate(arrows)}
    equations: List[Tuple[int, int]] = []
    constrained = 0
    for square in squares:
        if square.relation is None:
            continue
        constrained += 1
        mask = 0
        for arrow in square.first + square.second:
            mask ^= 1 << index[arrow]
        # equal composites need an odd number of flips, opposite ones an even number
        equations.append((mask, 1 if square.relation == 1 else 0))
    solution = gf2_solve(equations, len(arrows))
    if solution is None:
        raise InconsistentSquares(f"No sign choice makes {constrained} squares anticommute")
    signs = {
        arrow: (-1 if (solution >> position) & 1 else 1)
        for arrow, position in index.items()
    }
    logger.debug(
        "Solved signs for %d arrows, %d constrained squares, %d flips",
        len(arrows),
        constrained,
        bin(solution).count("1"),
    )
    return signs


def is_satisfactory(signs: Mapping[Arrow, int], squares: Iterable[Square]) -> bool:
    """Whether ``signs`` makes every constrained square anticommute."""
    for square in squares:
        if square.relation is None:
            continue
        a = signs[square.first[0]] * signs[square.first[1]]
        b = signs[square.second[0]] * signs[square.second[1]]
        if a * square.relation != -b:
            return False
    return True


__all__ = [
    "Arrow",
    "SignAssignment",
    "Square",
    "square_relation",
    "solve_satisfactory_signs",
    "is_satisfactory",
]
