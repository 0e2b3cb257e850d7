"""Kauffman bracket state sums and the cabling formula for colored Jones.

The bracket follows the Khovanov normalisation: a crossing resolves as
``<0-smoothing> - q <1-smoothing>`` and every circle is worth ``q + q^-1``.
With this choice the Jones polynomial of a diagram is exactly the graded
Euler characteristic of its Khovanov complex.
"""

import itertools
import logging
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra import LaurentPoly, laurent_div_exact, quantum_integer
from ..diagram import (
    LinkDiagram,
    add_kink,
    cable,
    smooth_crossing,
    switch_crossing,
)
from ..diagram.pd import SMOOTHINGS
from ..errors import InvalidSite, OutOfRange, UnknownComponent

logger = logging.getLogger(__name__)

Matching = Tuple[Tuple[int, int], ...]


def _crossing_order(diagram: LinkDiagram) -> List[int]:
    """Greedy order that keeps the set of half-processed edges small."""
    remaining = set(range(diagram.n_crossings))
    open_edges: Dict[int, int] = {}
    order: List[int] = []
    while remaining:
        x = max(
            remaining,
            key=lambda c: (sum(1 for e in diagram.crossings[c] if e in open_edges), -c),
        )
        remaining.discard(x)
        order.append(x)
        for edge in diagram.crossings[x]:
            open_edges[edge] = open_edges.get(edge, 0) + 1
            if open_edges[edge] == 2:
                del open_edges[edge]
    return order


def _join(partner: Dict[int, int], u: int, v: int) -> int:
    """Join edge ends u and v in a partial resolution; returns closed loops."""
    if u == v:
        return 1
    pu = partner.pop(u, None)
    pv = partner.pop(v, None)
    if pu is None and pv is None:
        partner[u] = v
        partner[v] = u
        return 0
    if pu == v:
        return 1
    if pu is None:
        partner[pv] = u  # type: ignore[index]
        partner[u] = pv  # type: ignore[assignment]
    elif pv is None:
        partner[pu] = v
        partner[v] = pu
    else:
        partner[pu] = pv
        partner[pv] = pu
    return 0


def kauffman_bracket(diagram: LinkDiagram) -> LaurentPoly:
    """Unnormalised bracket ``[D]``, summed crossing by crossing.

    Partial states that connect the open edges the same way are merged, so
    the cost grows with the width of the diagram rather than with 2^c.
    """
    delta = quantum_integer(2)
    minus_q = -LaurentPoly.q()
    states: Dict[Matching, LaurentPoly] = {(): LaurentPoly.constant(1)}
    for x in _crossing_order(diagram):
        crossing = diagram.crossings[x]
        merged: Dict[Matching, LaurentPoly] = {}
        for key, value in states.items():
            for bit, weight in ((0, LaurentPoly.constant(1)), (1, minus_q)):
                partner = dict((a, b) for pair in key for a, b in (pair, pair[::-1]))
                loops = sum(_join(partner, crossing[p], crossing[r]) for p, r in SMOOTHINGS[bit])
                new_key = tuple(sorted((a, b) for a, b in partner.items() if a < b))
                term = value * weight * delta ** loops
                merged[new_key] = merged.get(new_key, LaurentPoly()) + term
        states = {k: v for k, v in merged.items() if not v.is_zero()}
    total = states.get((), LaurentPoly())
    return total * delta ** len(diagram.loops)


def bracket_by_states(diagram: LinkDiagram) -> LaurentPoly:
    """The same bracket by enumerating all 2^c resolutions."""
    delta = quantum_integer(2)
    total = LaurentPoly()
    for state in itertools.product((0, 1), repeat=diagram.n_crossings):
        circles = len(diagram.resolution_circles(state))
        total = total + (-LaurentPoly.q()) ** sum(state) * delta ** circles
    return total


@lru_cache(maxsize=512)
def jones(diagram: LinkDiagram) -> LaurentPoly:
    """J(D) = (-1)^{n_-} q^{n_+ - 2n_-} [D]; the unknot gives q + q^-1."""
    sign = -1 if diagram.n_minus % 2 else 1
    return sign * LaurentPoly.q(diagram.n_plus - 2 * diagram.n_minus) * kauffman_bracket(diagram)


def _colors_of(diagram: LinkDiagram, colors: Optional[Sequence[int]]) -> Tuple[int, ...]:
    result = tuple(diagram.colors if colors is None else colors)
    if len(result) != diagram.n_components:
        raise UnknownComponent(
            f"{len(result)} colors given for {diagram.n_components} components"
        )
    if any(c < 0 for c in result):
        raise OutOfRange(f"Colors must be non-negative: {result}")
    return result


def colored_jones(diagram: LinkDiagram, colors: Optional[Sequence[int]] = None) -> LaurentPoly:
    """Colored Jones polynomial through the Jones polynomials of sub-cables.

    J_n = sum over k of (-1)^{|k|} prod binom(n_i - k_i, k_i) J(D^{n - 2k}).
    """
    colors = _colors_of(diagram, colors)
    total = LaurentPoly()
    for ks in itertools.product(*(range(n // 2 + 1) for n in colors)):
        coefficient = 1
        for n, k in zip(colors, ks):
            coefficient *= (-1) ** k * comb(n - k, k)
        sub_colors = [n - 2 * k for n, k in zip(colors, ks)]
        total = total + coefficient * jones(cable(diagram, sub_colors).diagram)
    logger.debug("Colored Jones of %r with colors %s: %s", diagram, colors, total)
    return total


def colored_jones_sum(
    diagram: LinkDiagram,
    colors: Optional[Sequence[int]],
    component: int,
    summands: Sequence[int],
) -> LaurentPoly:
    """Colored Jones with ``component`` colored by a direct sum of irreducibles."""
    base = list(_colors_of(diagram, colors))
    diagram._require_component(component)
    total = LaurentPoly()
    for color in summands:
        base[component] = color
        total = total + colored_jones(diagram, base)
    return total


def framing_factor(n: int, sign: int = 1) -> LaurentPoly:
    """Factor picked up by J_n when the framing of an n-colored component rises by ``sign``."""
    if n < 0:
        raise OutOfRange(f"Color must be non-negative: {n}")
    m = n // 2
    exponent = -2 * m * (m + 1) if n % 2 == 0 else -2 * m * (m + 2)
    return LaurentPoly.q(exponent * sign)


def framing_shift_check(diagram: LinkDiagram, n: int, component: int = 0, sign: int = 1) -> bool:
    """Compare J_n after adding a kink to ``component`` with the predicted factor."""
    diagram._require_component(component)
    colors = list(diagram.colors)
    colors[component] = n
    edge = min(diagram.components[component])
    kinked = add_kink(diagram, edge, sign)
    before = colored_jones(diagram, colors)
    after = colored_jones(kinked, colors)
    return after == framing_factor(n, sign) * before


def reduced_colored_jones(
    diagram: LinkDiagram, colors: Optional[Sequence[int]] = None, distinguished: int = 0
) -> LaurentPoly:
    """J_n divided exactly by [n+1] of the distinguished component."""
    colors = _colors_of(diagram, colors)
    diagram._require_component(distinguished)
    return laurent_div_exact(
        colored_jones(diagram, colors), quantum_integer(colors[distinguished] + 1)
    )


def orientation_reversal_factor(
    diagram: LinkDiagram, component: int, colors: Optional[Sequence[int]] = None
) -> LaurentPoly:
    """Predicted factor for reversing ``component``: q^{-6 lk} against the odd-colored rest."""
    colors = _colors_of(diagram, colors)
    diagram._require_component(component)
    if colors[component] % 2 == 0:
        return LaurentPoly.constant(1)
    lk = sum(
        diagram.linking_number(component, other)
        for other in range(diagram.n_components)
        if other != component and colors[other] % 2
    )
    return LaurentPoly.q(-6 * lk)


def skein_triple(diagram: LinkDiagram, x: int) -> Tuple[LinkDiagram, LinkDiagram, LinkDiagram]:
    """(L+, L-, L0) agreeing with ``diagram`` away from crossing ``x``."""
    if not 0 <= x < diagram.n_crossings:
        raise InvalidSite(f"No crossing {x}; diagram has {diagram.n_crossings}")
    switched = switch_crossing(diagram, x)
    smoothed, _ = smooth_crossing(diagram, x)
    if diagram.signs[x] > 0:
        return diagram, switched, smoothed
    return switched, diagram, smoothed


def skein_relation_holds(diagram: LinkDiagram, x: int) -> bool:
    """q^-2 J(L+) - q^2 J(L-) = (q^-1 - q) J(L0) at crossing ``x``."""
    plus, minus, zero = skein_triple(diagram, x)
    q = LaurentPoly.q
    return q(-2) * jones(plus) - q(2) * jones(minus) == (q(-1) - q(1)) * jones(zero)


__all__ = [
    "kauffman_bracket",
    "bracket_by_states",
    "jones",
    "colored_jones",
    "colored_jones_sum",
    "framing_factor",
    "framing_shift_check",
    "reduced_colored_jones",
    "orientation_reversal_factor",
    "skein_triple",
    "skein_relation_holds",
]
