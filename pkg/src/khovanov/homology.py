"""Khovanov homology, Poincare polynomials and the Betti table JSON format."""

import logging
from functools import lru_cache
from typing import Any, Dict, Iterable, Optional, Tuple

from ..algebra import BettiTable, FieldTag, Reduction, TwoVarPoly, euler_characteristic, gauss_eliminate
from ..diagram import LinkDiagram
from .cube import khovanov_cube

logger = logging.getLogger(__name__)


def khovanov_homology(
    diagram: LinkDiagram, field: FieldTag, marked: Optional[Iterable[int]] = None
) -> Tuple[BettiTable, Reduction]:
    """Homology of C(D) with the reduction that computed it."""
    return _cached_homology(diagram, field, tuple(sorted(set(marked or ()))))


@lru_cache(maxsize=64)
def _cached_homology(
    diagram: LinkDiagram, field: FieldTag, marked: Tuple[int, ...]
) -> Tuple[BettiTable, Reduction]:
    cube = khovanov_cube(diagram, field, marked)
    homology, reduction = gauss_eliminate(cube.complex)
    table = BettiTable.of_complex(homology)
    logger.debug("H(%r) over %s: total rank %d", diagram, field.value, table.total_rank())
    return table, reduction


def poincare(table: BettiTable) -> TwoVarPoly:
    """sum of t^i q^j rank(i, j)."""
    return table.poincare()


def betti_json(table: BettiTable, **extra: Any) -> Dict[str, Any]:
    """The Betti table as written by the CLI, with optional extra fields."""
    data: Dict[str, Any] = {
        "field": table.field.value,
        "betti": [{"i": i, "j": j, "rank": r} for (i, j), r in sorted(table.ranks.items())],
        "euler": euler_characteristic(table).to_text(),
    }
    data.update(extra)
    return data


def betti_from_json(data: Dict[str, Any]) -> BettiTable:
    field = FieldTag.from_name(data["field"])
    return BettiTable({(row["i"], row["j"]): row["rank"] for row in data["betti"]}, field)


__all__ = ["khovanov_homology", "poincare", "betti_json", "betti_from_json"]
