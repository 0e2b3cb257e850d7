"""Temperley-Lieb algebra with generic loop value and Jones-Wenzl projectors.

A TL diagram on ``n`` strands pairs ``2n`` boundary points: bottom points
``0..n-1`` left to right and top points ``n..2n-1`` left to right. Closed
loops evaluate to ``[2] = q + q^-1``. Products stack the left factor on top
of the right one.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from ..algebra import LaurentPoly, RationalFn, quantum_integer
from ..errors import AmbiguousE, OutOfRange

logger = logging.getLogger(__name__)

Matching = Tuple[Tuple[int, int], ...]
Scalar = Union[int, LaurentPoly, RationalFn]


def catalan(n: int) -> int:
    if n < 0:
        raise OutOfRange(f"Catalan number of a negative index: {n}")
    return comb(2 * n, n) // (n + 1)


def _crossingless(pairs: Matching, order: Mapping[int, int]) -> bool:
    """Whether a matching is planar when points sit on a circle in ``order``."""
    partner = {}
    for a, b in pairs:
        partner[a] = b
        partner[b] = a
    stack: List[int] = []
    for point in sorted(partner, key=lambda p: order[p]):
        if stack and partner[point] == stack[-1]:
            stack.pop()
        else:
            stack.append(point)
    return not stack


def crossingless_matchings(n: int) -> List[Matching]:
    """All crossingless matchings of points 1..2n on a line, as sorted pairs."""
    if n < 0:
        raise OutOfRange(f"Matching size must be non-negative: {n}")

    @lru_cache(maxsize=None)
    def build(lo: int, hi: int) -> Tuple[Matching, ...]:
        if lo > hi:
            return ((),)
        result = []
        for partner in range(lo + 1, hi + 1, 2):
            for inside in build(lo + 1, partner - 1):
                for outside in build(partner + 1, hi):
                    result.append(tuple(sorted(((lo, partner),) + inside + outside)))
        return tuple(result)

    return sorted(build(1, 2 * n))


def rainbow(n: int) -> Matching:
    """The nested matching {(i, 2n+1-i)}."""
    return tuple((i, 2 * n + 1 - i) for i in range(1, n + 1))


@dataclass(frozen=True)
class TLDiagram:
    """A crossingless pairing of the 2n boundary points of an n-strand box."""

    n: int
    pairs: Matching

    def __post_init__(self) -> None:
        points = sorted(p for pair in self.pairs for p in pair)
        if points != list(range(2 * self.n)):
            raise OutOfRange(f"TL diagram on {self.n} strands must pair points 0..{2 * self.n - 1}")
        # bottom left to right, then top right to left: the boundary of the box
        order = {i: i for i in range(self.n)}
        order.update({self.n + i: 2 * self.n - 1 - i for i in range(self.n)})
        if not _crossingless(self.pairs, order):
            raise OutOfRange(f"TL diagram pairs cross: {self.pairs}")

    @classmethod
    def build(cls, n: int, pairs) -> "TLDiagram":
        return cls(n, tuple(sorted(tuple(sorted(p)) for p in pairs)))

    @classmethod
    def identity(cls, n: int) -> "TLDiagram":
        return cls.build(n, [(i, n + i) for i in range(n)])

    @classmethod
    def cup_cap(cls, n: int, i: int) -> "TLDiagram":
        """The generator e_i joining strands i and i+1 (1-based) top and bottom."""
        if not 1 <= i < n:
            raise OutOfRange(f"No generator e_{i} on {n} strands")
        pairs = [(i - 1, i), (n + i - 1, n + i)]
        pairs += [(k, n + k) for k in range(n) if k not in (i - 1, i)]
        return cls.build(n, pairs)

    def with_strand(self) -> "TLDiagram":
        """This diagram next to one extra vertical strand on the right."""
        n = self.n

        def relabel(p: int) -> int:
            return p if p < n else p + 1

        pairs = [(relabel(a), relabel(b)) for a, b in self.pairs] + [(n, 2 * n + 1)]
        return TLDiagram.build(n + 1, pairs)


def compose(upper: TLDiagram, lower: TLDiagram) -> Tuple[TLDiagram, int]:
    """Stack ``upper`` on ``lower``; returns the diagram and the closed loop count."""
    n = lower.n
    if upper.n != n:
        raise OutOfRange(f"Cannot stack {upper.n} strands on {n}")
    strand: Dict[Tuple[str, int], Tuple[str, int]] = {}
    for side, diagram in (("L", lower), ("U", upper)):
        for a, b in diagram.pairs:
            strand[(side, a)] = (side, b)
            strand[(side, b)] = (side, a)

    def glue(point: Tuple[str, int]) -> Optional[Tuple[str, int]]:
        side, p = point
        if side == "L" and p >= n:
            return ("U", p - n)
        if side == "U" and p < n:
            return ("L", p + n)
        return None

    seen = set()
    pairs = []
    for start in [("L", i) for i in range(n)] + [("U", n + i) for i in range(n)]:
        if start in seen:
            continue
        point = start
        seen.add(point)
        while True:
            other = strand[point]
            seen.add(other)
            following = glue(other)
            if following is None:
                break
            seen.add(following)
            point = following
        pairs.append((start[1], other[1]))

    loops = 0
    for k in range(n):
        point = ("L", n + k)
        if point in seen:
            continue
        loops += 1
        while point not in seen:
            seen.add(point)
            other = strand[point]
            seen.add(other)
            point = glue(other)  # type: ignore[assignment]
    return TLDiagram.build(n, pairs), loops


class TLElement:
    """A RationalFn-linear combination of TL diagrams on n strands."""

    def __init__(self, n: int, terms: Optional[Mapping[TLDiagram, Scalar]] = None):
        self.n = n
        self.terms: Dict[TLDiagram, RationalFn] = {}
        for diagram, coefficient in (terms or {}).items():
            value = RationalFn.promote(coefficient)
            if not value.is_zero():
                self.terms[diagram] = value

    @classmethod
    def identity(cls, n: int) -> "TLElement":
        return cls(n, {TLDiagram.identity(n): 1})

    @classmethod
    def generator(cls, n: int, i: int) -> "TLElement":
        return cls(n, {TLDiagram.cup_cap(n, i): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, diagram: TLDiagram) -> RationalFn:
        return self.terms.get(diagram, RationalFn(0))

    def __iter__(self) -> Iterator[Tuple[TLDiagram, RationalFn]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "TLElement") -> "TLElement":
        result = dict(self.terms)
        for diagram, coefficient in other.terms.items():
            result[diagram] = result.get(diagram, RationalFn(0)) + coefficient
        return TLElement(self.n, result)

    def __neg__(self) -> "TLElement":
        return TLElement(self.n, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + (-other)

    def scale(self, factor: Scalar) -> "TLElement":
        return TLElement(self.n, {d: c * factor for d, c in self.terms.items()})

    def __mul__(self, other: "TLElement") -> "TLElement":
        delta = quantum_integer(2)
        result: Dict[TLDiagram, RationalFn] = {}
        for top, c_top in self.terms.items():
            for bottom, c_bottom in other.terms.items():
                diagram, loops = compose(top, bottom)
                value = c_top * c_bottom * delta ** loops
                result[diagram] = result.get(diagram, RationalFn(0)) + value
        return TLElement(self.n, result)

    def with_strand(self) -> "TLElement":
        return TLElement(self.n + 1, {d.with_strand(): c for d, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        return f"TLElement(n={self.n}, terms={len(self.terms)})"


@lru_cache(maxsize=None)
def jones_wenzl(n: int) -> TLElement:
    """The projector p_n from Wenzl's recursion.

    p_{k+1} = p_k (x) 1 - ([k]/[k+1]) (p_k (x) 1) e_k (p_k (x) 1).
    """
    if n < 1:
        raise OutOfRange(f"Projector needs at least one strand: {n}")
    projector = TLElement.identity(1)
    for k in range(1, n):
        extended = projector.with_strand()
        ratio = RationalFn(quantum_integer(k), quantum_integer(k + 1))
        middle = extended * TLElement.generator(k + 1, k) * extended
        projector = extended - middle.scale(ratio)
    logger.debug("Jones-Wenzl projector p_%d has %d terms", n, len(projector))
    return projector


def _loops_against(diagram: TLDiagram, matching: Matching) -> int:
    """Closed loops formed by a TL diagram and a matching of points 1..2n.

    Point k <= n attaches to bottom point k-1 and point k > n to top point
    2n - k, so the rainbow matching closes the diagram into its trace.
    """
    n = diagram.n

    def attach(k: int) -> int:
        return k - 1 if k <= n else n + (2 * n - k)

    inner: Dict[int, int] = {}
    for a, b in diagram.pairs:
        inner[a] = b
        inner[b] = a
    outer: Dict[int, int] = {}
    for a, b in matching:
        outer[attach(a)] = attach(b)
        outer[attach(b)] = attach(a)
    seen = set()
    loops = 0
    for start in range(2 * n):
        if start in seen:
            continue
        loops += 1
        point = start
        while point not in seen:
            seen.add(point)
            other = inner[point]
            seen.add(other)
            point = outer[other]
    return loops


def projector_coupling(n: int, matching: Matching) -> RationalFn:
    """Close p_n against a crossingless matching and evaluate the loops."""
    if sorted(p for pair in matching for p in pair) != list(range(1, 2 * n + 1)):
        raise OutOfRange(f"Not a matching of 2*{n} points: {matching}")
    delta = quantum_integer(2)
    total = RationalFn(0)
    for diagram, coefficient in jones_wenzl(n):
        total = total + coefficient * delta ** _loops_against(diagram, matching)
    return total


def identify_e(n: int) -> Matching:
    """The only matching on which the projector coupling is nonzero."""
    if n < 1:
        raise OutOfRange(f"identify_e needs n >= 1, got {n}")
    supported = [m for m in crossingless_matchings(n) if not projector_coupling(n, m).is_zero()]
    if len(supported) != 1:
        raise AmbiguousE(f"Projector p_{n} couples nontrivially with {len(supported)} matchings")
    if supported[0] != rainbow(n):
        raise AmbiguousE(f"Projector p_{n} is supported on {supported[0]}, not the rainbow")
    return supported[0]


__all__ = [
    "Matching",
    "catalan",
    "crossingless_matchings",
    "rainbow",
    "TLDiagram",
    "TLElement",
    "compose",
    "jones_wenzl",
    "projector_coupling",
    "identify_e",
]
