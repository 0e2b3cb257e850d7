"""Homotopy equivalences for Reidemeister II and III moves.

Both moves are handled the same way. Around a bigon (or, for R3, the bigon
that appears once the bottom crossing of the triangle is smoothed) the cube
contains a small circle ``O``. Splitting it off is cancelled against the
``O = X`` generators and merging it away is cancelled against the ``O = 1``
generators. What survives is matched generator by generator with the other
side of the move, up to a diagonal rescaling found by walking the
differential.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..algebra import ChainComplex, FieldTag, Reduction, accumulate, eliminate_pairs
from ..algebra.chain import Key, Vector
from ..diagram import LinkDiagram, Move, R2Minus, R2Plus, R3, r2_bigon, r2_minus, r3_triangle
from ..diagram.pd import SMOOTHINGS
from ..errors import InvalidMove, InvalidSite, MoveValidationFailed
from ..khovanov import ONE, X, KhovanovCube, khovanov_cube, match_circles
from .maps import CobordismMap

logger = logging.getLogger(__name__)

Homotopy = Callable[[Vector], Vector]
End = Tuple[int, bool]


def _no_homotopy(vector: Vector) -> Vector:
    return {}


@dataclass(frozen=True, eq=False)
class ReidemeisterEquivalence:
    """Chain maps both ways with homotopies on each side.

    ``id - backward * forward = d h + h d`` with ``h = source_homotopy``, and
    likewise on the target with ``target_homotopy``.
    """

    forward: CobordismMap
    backward: CobordismMap
    source_homotopy: Homotopy = _no_homotopy
    target_homotopy: Homotopy = _no_homotopy

    def check(self, limit: Optional[int] = None) -> None:
        """Check both chain maps and both homotopy identities."""
        self.forward.check(limit)
        self.backward.check(limit)
        _check_homotopy(self.forward.source, self.forward.then(self.backward), self.source_homotopy, limit)
        _check_homotopy(self.forward.target, self.backward.then(self.forward), self.target_homotopy, limit)


def _check_homotopy(
    cube: KhovanovCube, round_trip: CobordismMap, h: Homotopy, limit: Optional[int]
) -> None:
    complex_ = cube.complex
    field = complex_.field
    keys = complex_.keys()
    if limit is not None:
        keys = keys[:limit]
    for key in keys:
        lhs = complex_.d(h({key: 1}))
        accumulate(field, lhs, h(complex_.differential_of(key)))
        rhs: Vector = {key: field.one()}
        accumulate(field, rhs, round_trip.run({key: 1}), -1)
        if lhs != rhs:
            raise MoveValidationFailed(
                f"{round_trip.name} is not homotopic to the identity at {key}"
            )


def _pairing_bit(diagram: LinkDiagram, x: int, loop: Iterable[int]) -> int:
    """The smoothing of crossing ``x`` that joins its two edges on ``loop``."""
    loop = set(loop)
    slots = tuple(p for p, e in enumerate(diagram.crossings[x]) if e in loop)
    if len(slots) != 2:
        raise MoveValidationFailed(f"Crossing {x} meets the small circle {len(slots)} times")
    for bit, pairs in enumerate(SMOOTHINGS):
        if slots in pairs:
            return bit
    raise MoveValidationFailed(f"Edges {sorted(loop)} are opposite at crossing {x}")


def _bits_match(state: int, bits: Mapping[int, int]) -> bool:
    return all((state >> x) & 1 == b for x, b in bits.items())


def _set_bits(state: int, bits: Mapping[int, int]) -> int:
    for x, b in bits.items():
        state = state | (1 << x) if b else state & ~(1 << x)
    return state


def _designated_pairs(
    cube: KhovanovCube,
    b: int,
    c: int,
    loop: Sequence[int],
    fixed: Mapping[int, int],
) -> Tuple[List[Tuple[Key, Key]], Dict[int, int]]:
    """Pairs cancelling the small circle through ``loop`` at crossings b and c.

    Returns the pairs (all splits first, then all merges) and the local
    bits of the surviving resolution at b and c.
    """
    diagram = cube.diagram
    for edge in loop:
        if edge in cube.marked:
            raise MoveValidationFailed(f"Marked edge {edge} lies on the small circle of the move")
    beta = {b: _pairing_bit(diagram, b, loop), c: _pairing_bit(diagram, c, loop)}
    if beta[b] == beta[c]:
        raise MoveValidationFailed(
            f"The small circle at crossings {b}, {c} appears in resolution {beta[b]}{beta[c]}"
        )
    up = b if beta[b] == 1 else c
    down = c if up == b else b
    identity = {e: e for e in diagram.edges}
    splits: List[Tuple[Key, Key]] = []
    merges: List[Tuple[Key, Key]] = []
    sigma_bits = {**fixed, **beta}

    for state in cube.states():
        if not _bits_match(state, sigma_bits):
            continue
        low, high = state & ~(1 << up), state | (1 << down)
        if not (cube.has_state(low) and cube.has_state(high)):
            raise MoveValidationFailed(f"Resolution {state} of the move site has no neighbours")
        o = cube.circle_at(state, loop[0])
        if set(cube.circles[state][o]) != set(loop):
            raise MoveValidationFailed(f"Edges {sorted(loop)} do not form a circle in {state}")

        split = match_circles(
            cube.circles[low], cube.circles[state], identity, diagram.crossings[up], diagram.crossings[up]
        )
        for labels in cube.labellings(low):
            images = [new for new in split.transfer(labels, len(cube.circles[state])) if new[o] == X]
            _append_pair(cube, splits, (low, labels), (state, images[0]) if len(images) == 1 else None)

        merge = match_circles(
            cube.circles[state],
            cube.circles[high],
            identity,
            diagram.crossings[down],
            diagram.crossings[down],
        )
        for labels in cube.labellings(state):
            if labels[o] != ONE:
                continue
            images = merge.transfer(labels, len(cube.circles[high]))
            _append_pair(cube, merges, (state, labels), (high, images[0]) if len(images) == 1 else None)

    tau = {b: 1 - beta[b], c: 1 - beta[c]}
    return splits + merges, tau


def _append_pair(cube: KhovanovCube, pairs: List[Tuple[Key, Key]], source, target) -> None:
    x = cube.key(*source)
    y = cube.key(*target) if target is not None else None
    if x is None or y is None:
        raise MoveValidationFailed(f"No designated partner for generator {source}")
    pairs.append((x, y))


def _diagonal_isomorphism(
    field: FieldTag,
    reduced: ChainComplex,
    target: ChainComplex,
    matching: Mapping[Key, Key],
) -> Dict[Key, Tuple[Key, object]]:
    """Scalars ``e(u)`` making ``u -> e(u) matching[u]`` an isomorphism of complexes."""
    if len(set(matching.values())) != len(matching) or len(matching) != target.total_dim():
        raise MoveValidationFailed("Surviving generators do not match the other side one to one")
    adjacency: Dict[Key, List[Tuple[Key, object, bool]]] = {key: [] for key in matching}
    entries = 0
    for u in matching:
        for w, c in reduced.differential_of(u).items():
            c2 = target.differential_of(matching[u]).get(matching[w], 0)
            if not c2:
                raise MoveValidationFailed(f"Differential entry {u} -> {w} has no counterpart")
            ratio = field.reduce(c2 * field.inverse(c))
            adjacency[u].append((w, ratio, True))
            adjacency[w].append((u, ratio, False))
            entries += 1
    if entries != sum(len(target.differential_of(k)) for k in target.keys()):
        raise MoveValidationFailed("The other side of the move has extra differential entries")

    scale: Dict[Key, object] = {}
    for root in matching:
        if root in scale:
            continue
        scale[root] = field.one()
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, ratio, outgoing in adjacency[u]:
                value = field.reduce(
                    scale[u] * ratio if outgoing else scale[u] * field.inverse(ratio)
                )
                if w not in scale:
                    scale[w] = value
                    queue.append(w)
                elif scale[w] != value:
                    raise MoveValidationFailed(f"No consistent rescaling at generator {w}")
    return {u: (matching[u], scale[u]) for u in matching}


def _apply_diagonal(field: FieldTag, table: Mapping[Key, Tuple[Key, object]], vector: Vector) -> Vector:
    result: Vector = {}
    for key, value in vector.items():
        image, factor = table[key]
        accumulate(field, result, {image: factor}, value)
    return result


def _invert_diagonal(field: FieldTag, table: Mapping[Key, Tuple[Key, object]]):
    return {image: (key, field.inverse(factor)) for key, (image, factor) in table.items()}


def _r2_lift_marks(big: LinkDiagram, c1: int, c2: int, marked: Iterable[int]) -> Tuple[int, ...]:
    """Edges of the bigger diagram carrying the marks of the smaller one."""
    over, under = r2_bigon(big, c1, c2)
    _, mapping = r2_minus(big, c1, c2)
    result = []
    for edge in marked:
        choices = [e for e, image in mapping.items() if image == edge and e not in (over, under)]
        if not choices:
            raise MoveValidationFailed(f"Marked edge {edge} has no counterpart before the move")
        result.append(min(choices))
    return tuple(sorted(result))


def _r2_core(
    big: KhovanovCube, small: KhovanovCube, c1: int, c2: int
) -> Tuple[Reduction, Dict[Key, Tuple[Key, object]]]:
    """Reduce C(big) at the bigon and match it with C(small)."""
    try:
        over, under = r2_bigon(big.diagram, c1, c2)
        _, mapping = r2_minus(big.diagram, c1, c2)
    except InvalidSite as e:
        raise InvalidMove(f"R2 at crossings {c1}, {c2}: {e}") from e
    pairs, tau = _designated_pairs(big, c1, c2, (over, under), {})
    reduced, reduction = eliminate_pairs(big.complex, pairs, name=f"R2({big.diagram!r})")
    external = {e: v for e, v in mapping.items() if e not in (over, under)}

    matching: Dict[Key, Key] = {}
    matches = {}
    for key in reduced.keys():
        state, labels = reduced.label(key)
        if not _bits_match(state, tau):
            raise MoveValidationFailed(f"Generator {reduced.label(key)} survived outside the move site")
        bits = [(state >> x) & 1 for x in range(big.n_crossings) if x not in (c1, c2)]
        small_state = sum(bit << k for k, bit in enumerate(bits))
        if not small.has_state(small_state):
            raise MoveValidationFailed(f"Resolution {small_state} missing after the move")
        if state not in matches:
            matches[state] = match_circles(big.circles[state], small.circles[small_state], external)
        (new,) = matches[state].transfer(labels, len(small.circles[small_state]))
        target = small.key(small_state, new)
        if target is None or (target[0], target[1]) != (key[0], key[1]):
            raise MoveValidationFailed(f"Generator {reduced.label(key)} has no counterpart after the move")
        matching[key] = target
    table = _diagonal_isomorphism(big.field, reduced, small.complex, matching)
    logger.debug("R2 at %d, %d: %d pairs cancelled", c1, c2, len(pairs))
    return reduction, table


def _r2_equivalence(big: KhovanovCube, small: KhovanovCube, c1: int, c2: int, remove: bool):
    field = big.field
    reduction, table = _r2_core(big, small, c1, c2)
    inverse = _invert_diagonal(field, table)

    def collapse(vector: Vector) -> Vector:
        return _apply_diagonal(field, table, reduction.project(vector))

    def expand(vector: Vector) -> Vector:
        return reduction.include(_apply_diagonal(field, inverse, vector))

    shrink = CobordismMap(big, small, (0, 0), collapse, f"R2-({c1},{c2})")
    grow = CobordismMap(small, big, (0, 0), expand, f"R2+({c1},{c2})")
    if remove:
        return ReidemeisterEquivalence(shrink, grow, reduction.homotopy, _no_homotopy)
    return ReidemeisterEquivalence(grow, shrink, _no_homotopy, reduction.homotopy)


def _r3_roles(diagram: LinkDiagram, crossings: Tuple[int, int, int]):
    """(bottom crossing, triangle edges) of an R3 site."""
    c1, c2, c3 = crossings
    try:
        triangle = r3_triangle(diagram, c1, c2, c3)
    except InvalidSite as e:
        raise InvalidMove(f"R3 at crossings {crossings}: {e}") from e
    for e in triangle:
        ends = (diagram.head[e], diagram.tail[e])
        if all(p % 2 for _, p in ends):
            top = {x for x, _ in ends}
            (bottom,) = set(crossings) - top
            return bottom, triangle
    raise MoveValidationFailed(f"No strand passes over both crossings of {crossings}")


def _end_key(diagram: LinkDiagram, x: int, p: int) -> End:
    edge = diagram.crossings[x][p]
    return edge, diagram.head[edge] == (x, p)


def tangle_matching(
    diagram: LinkDiagram, local: Mapping[int, int], inner: Iterable[int]
) -> FrozenSet[FrozenSet[End]]:
    """How a partial resolution of the crossings in ``local`` joins the tangle ends."""
    inner = set(inner)
    pairs = set()
    for x in local:
        for p, e in enumerate(diagram.crossings[x]):
            if e in inner:
                continue
            start = _end_key(diagram, x, p)
            y, r = x, p
            for _ in range(2 * len(local) + 1):
                q = next(b if a == r else a for a, b in SMOOTHINGS[local[y]] if r in (a, b))
                f = diagram.crossings[y][q]
                if f not in inner:
                    pairs.add(frozenset((start, _end_key(diagram, y, q))))
                    break
                y, r = diagram.tail[f] if diagram.head[f] == (y, q) else diagram.head[f]
            else:
                raise MoveValidationFailed(f"Closed circle inside the tangle at {sorted(local)}")
    return frozenset(pairs)


def _r3_reduce(cube: KhovanovCube, crossings: Tuple[int, int, int]):
    bottom, triangle = _r3_roles(cube.diagram, crossings)
    b, c = sorted(set(crossings) - {bottom})
    fixed = {bottom: _pairing_bit(cube.diagram, bottom, triangle)}
    pairs, _ = _designated_pairs(cube, b, c, triangle, fixed)
    reduced, reduction = eliminate_pairs(cube.complex, pairs, name=f"R3({cube.diagram!r})")
    return reduced, reduction, triangle


def _r3_equivalence(source: KhovanovCube, target: KhovanovCube, crossings: Tuple[int, int, int]):
    field = source.field
    reduced, reduction, triangle = _r3_reduce(source, crossings)
    reduced2, reduction2, triangle2 = _r3_reduce(target, crossings)

    def local_states(complex_: ChainComplex) -> Dict[Tuple[int, ...], List[Key]]:
        found: Dict[Tuple[int, ...], List[Key]] = {}
        for key in complex_.keys():
            state = complex_.label(key)[0]
            found.setdefault(tuple((state >> x) & 1 for x in crossings), []).append(key)
        return found

    def matchings(diagram: LinkDiagram, locals_, inner):
        return {
            bits: tangle_matching(diagram, dict(zip(crossings, bits)), inner) for bits in locals_
        }

    left = matchings(source.diagram, local_states(reduced), triangle)
    right = {m: bits for bits, m in matchings(target.diagram, local_states(reduced2), triangle2).items()}
    if len(right) != len(left) or set(right) != set(left.values()):
        raise MoveValidationFailed(f"R3 at {crossings}: surviving resolutions do not correspond")

    inner = set(triangle) | set(triangle2)
    matching: Dict[Key, Key] = {}
    for key in reduced.keys():
        state, labels = reduced.label(key)
        bits = right[left[tuple((state >> x) & 1 for x in crossings)]]
        state2 = _set_bits(state, dict(zip(crossings, bits)))
        if not target.has_state(state2):
            raise MoveValidationFailed(f"Resolution {state2} missing after R3")
        index = {
            frozenset(e for e in circle if e not in inner): t
            for t, circle in enumerate(target.circles[state2])
        }
        new = [ONE] * len(index)
        for s, circle in enumerate(source.circles[state]):
            t = index.get(frozenset(e for e in circle if e not in inner))
            if t is None:
                raise MoveValidationFailed(f"Circle {circle} has no counterpart after R3")
            new[t] = labels[s]
        label2 = (state2, tuple(new))
        i, j = target.degree(*label2)
        if (i, j) != (key[0], key[1]) or not reduced2.has_label(i, j, label2):
            raise MoveValidationFailed(f"Generator {reduced.label(key)} has no counterpart after R3")
        matching[key] = reduced2.key_of(i, j, label2)
    table = _diagonal_isomorphism(field, reduced, reduced2, matching)
    inverse = _invert_diagonal(field, table)

    def forward(vector: Vector) -> Vector:
        return reduction2.include(_apply_diagonal(field, table, reduction.project(vector)))

    def backward(vector: Vector) -> Vector:
        return reduction.include(_apply_diagonal(field, inverse, reduction2.project(vector)))

    name = f"R3{crossings}"
    return ReidemeisterEquivalence(
        CobordismMap(source, target, (0, 0), forward, name),
        CobordismMap(target, source, (0, 0), backward, name + "^-1"),
        reduction.homotopy,
        reduction2.homotopy,
    )


def reidemeister_equivalence(
    move: Move, source: KhovanovCube, target: Optional[KhovanovCube] = None
) -> ReidemeisterEquivalence:
    """Mutually inverse (up to homotopy) chain maps for an R2 or R3 move."""
    field = source.field
    try:
        after, mapping = move.apply_with_map(source.diagram)
    except InvalidSite as e:
        raise InvalidMove(f"{move!r} does not apply: {e}") from e

    if isinstance(move, R2Minus):
        c1, c2 = move.c1, move.c2
        over, under = r2_bigon(source.diagram, c1, c2)
        if over in source.marked or under in source.marked:
            raise MoveValidationFailed(f"R2 at {c1}, {c2} would remove a marked edge")
        if target is None:
            marks = tuple(sorted({mapping[e] for e in source.marked}))
            target = khovanov_cube(after, field, marks)
        return _r2_equivalence(source, target, c1, c2, remove=True)

    if isinstance(move, R2Plus):
        c1, c2 = move.crossings
        if target is None:
            marks = _r2_lift_marks(after, c1, c2, source.marked)
            target = khovanov_cube(after, field, marks)
        return _r2_equivalence(target, source, c1, c2, remove=False)

    if isinstance(move, R3):
        if target is None:
            target = khovanov_cube(after, field, source.marked)
        return _r3_equivalence(source, target, (move.c1, move.c2, move.c3))

    raise InvalidMove(f"{move!r} is not a Reidemeister II or III move")


__all__ = [
    "ReidemeisterEquivalence",
    "reidemeister_equivalence",
    "tangle_matching",
]
