"""Comparisons between the four variants and the small-color sanity checks."""

import logging
from typing import Any, Dict, Optional, Sequence, Union

from ..algebra import BettiTable, FieldTag, gauss_eliminate
from ..diagram import LinkDiagram, add_kink, load_knot
from ..errors import InvariantViolation, OutOfRange
from ..khovanov import khovanov_homology
from ..oracle import colored_jones
from .complex import (
    ColoredComplex,
    Variant,
    _cokernel_complex,
    _kernel_complex,
    colored_complex,
)

logger = logging.getLogger(__name__)


def _table(complex_) -> BettiTable:
    if complex_.is_zero_differential():
        return BettiTable.of_complex(complex_)
    homology, _ = gauss_eliminate(complex_)
    return BettiTable.of_complex(homology)


def _colors_for(diagram: LinkDiagram, colors: Union[int, Sequence[int]]) -> tuple:
    if isinstance(colors, int):
        return (colors,) * diagram.n_components
    return tuple(colors)


def d0_surjective(contract: ColoredComplex) -> bool:
    """Whether the first differential of a contracting complex is onto."""
    (bottom,) = contract.levels[0]
    for i, j in contract.term(bottom).degrees():
        block = contract.d0_block(i, j)
        if block.rank() != block.rows:
            return False
    degrees = {d for t in contract.levels.get(1, []) for d in contract.term(t).degrees()}
    missing = degrees - set(contract.term(bottom).degrees())
    return not missing


def composite_invertible(contract: ColoredComplex, expand: ColoredComplex) -> bool:
    """Whether d0 after d'_-1 is invertible on the pairing-degree-one terms."""
    covers = contract.levels.get(1, [])
    degrees = {d for t in covers for d in contract.term(t).degrees()}
    for i, j in sorted(degrees):
        down = contract.d0_block(i, j)
        up = expand.d0_block(i, j)
        composite = down @ up
        if composite.rank() != composite.rows:
            return False
    return True


def compare_variants(
    diagram: LinkDiagram,
    colors: Union[int, Sequence[int]],
    field: FieldTag = FieldTag.Q,
) -> Dict[str, Any]:
    """Betti tables of all four variants and whether they agree.

    Agreement is enforced for knots colored 2 outside characteristic 2 and
    for knots colored 3 over F2; elsewhere the report is informational.
    """
    colors = _colors_for(diagram, colors)
    contract = colored_complex(diagram, colors, field, Variant.CONTRACT_FULL)
    expand = colored_complex(diagram, colors, field, Variant.EXPAND_FULL)
    tables = {
        Variant.CONTRACT_FULL: _table(contract.complex),
        Variant.CONTRACT_KERNEL: _table(_kernel_complex(contract)),
        Variant.EXPAND_FULL: _table(expand.complex),
        Variant.EXPAND_COKERNEL: _table(_cokernel_complex(expand)),
    }
    equal = len(set(tables.values())) == 1
    knot = diagram.n_components == 1
    enforced = knot and (
        (colors[0] == 2 and field is FieldTag.Q) or (colors[0] == 3 and field is FieldTag.F2)
    )
    report: Dict[str, Any] = {
        "colors": list(colors),
        "field": field.value,
        "tables": {variant.value: table for variant, table in tables.items()},
        "equal": equal,
        "enforced": enforced,
        "d0_surjective": d0_surjective(contract),
        "composite_invertible": composite_invertible(contract, expand),
    }
    logger.info(
        "Variants of %r, colors %s over %s: equal=%s surjective=%s invertible=%s",
        diagram,
        list(colors),
        field.value,
        equal,
        report["d0_surjective"],
        report["composite_invertible"],
    )
    if enforced and not equal:
        ranks = {variant.value: table.ranks for variant, table in tables.items()}
        raise InvariantViolation(
            f"Variant tables of {diagram!r} colored {colors[0]} over {field.value} disagree: {ranks}"
        )
    return report


def euler_matches_oracle(
    diagram: LinkDiagram, colors: Optional[Sequence[int]] = None, field: FieldTag = FieldTag.Q
) -> bool:
    """Euler characteristic of the contracting complex against the colored Jones polynomial."""
    complex_ = colored_complex(diagram, colors, field)
    expected = colored_jones(diagram, complex_.colors)
    found = complex_.euler_characteristic()
    if found != expected:
        logger.warning("Euler characteristic %s differs from colored Jones %s", found, expected)
    return found == expected


def same_colored_homology(
    first: LinkDiagram,
    second: LinkDiagram,
    colors: Union[int, Sequence[int]],
    field: FieldTag = FieldTag.Q,
) -> bool:
    """Whether two diagrams of one framed link have equal colored Betti tables."""
    tables = [_table(colored_complex(d, _colors_for(d, colors), field).complex) for d in (first, second)]
    if tables[0] != tables[1]:
        logger.warning("Colored homology of %r and %r differ: %s vs %s", first, second, *tables)
    return tables[0] == tables[1]


def framed_unknot(m: int) -> LinkDiagram:
    """The unknot with blackboard framing ``m``, drawn with |m| curls."""
    diagram = load_knot("unknot")
    for _ in range(abs(m)):
        diagram = add_kink(diagram, min(diagram.edges), 1 if m > 0 else -1)
    return diagram


def long_exact_sequence_check(diagram: LinkDiagram) -> Dict[str, Any]:
    """The color-2 sequence 0 -> H_2 -> H(D^2) -> k: ranks differ by one either way.

    Over Q the map u is onto and rank H_2 = rank H(D^2) - 1. The F2 rank
    of u is recorded as well, since its image may have index 2 over Z.
    """
    if diagram.n_components != 1:
        raise OutOfRange(f"Expected a knot diagram, got {diagram.n_components} components")
    report: Dict[str, Any] = {}
    for field in (FieldTag.Q, FieldTag.F2):
        complex_ = colored_complex(diagram, (2,), field)
        (bottom,) = complex_.levels[0]
        (top,) = complex_.levels[1]
        u = complex_.maps[(bottom, top)]
        onto = u.rank() == complex_.term(top).total_dim()
        cable_rank = complex_.term(bottom).total_dim()
        colored_rank = _table(complex_.complex).total_rank()
        expected = cable_rank - 1 if onto else cable_rank + 1
        report[field.value] = {
            "u_rank": u.rank(),
            "surjective": onto,
            "cable_rank": cable_rank,
            "colored_rank": colored_rank,
            "holds": colored_rank == expected,
        }
    report["holds"] = report["q"]["holds"] and report["f2"]["holds"] and report["q"]["surjective"]
    return report


def framed_unknot_ranks(m: int, field: FieldTag = FieldTag.Q) -> Dict[str, Any]:
    """rank H(K^2) = 2 + 2|m| and rank H_2 = 1 + 2|m| for the m-framed unknot."""
    diagram = framed_unknot(m)
    complex_ = colored_complex(diagram, (2,), field)
    cable_table, _ = khovanov_homology(complex_.cable.diagram, field)
    colored_rank = _table(complex_.complex).total_rank()
    report = {
        "framing": m,
        "cable_rank": cable_table.total_rank(),
        "colored_rank": colored_rank,
        "expected_cable_rank": 2 + 2 * abs(m),
        "expected_colored_rank": 1 + 2 * abs(m),
    }
    report["holds"] = (
        report["cable_rank"] == report["expected_cable_rank"]
        and report["colored_rank"] == report["expected_colored_rank"]
    )
    return report


__all__ = [
    "compare_variants",
    "d0_surjective",
    "composite_invertible",
    "euler_matches_oracle",
    "framed_unknot",
    "framed_unknot_ranks",
    "long_exact_sequence_check",
    "same_colored_homology",
]
