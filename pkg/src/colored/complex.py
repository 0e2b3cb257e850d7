"""Colored complexes assembled from cable homologies and annulus maps.

The term of pairing degree k is the direct sum of H(D^s) over the
multi-pairings s with k pairs in total. A generator of H(D^s) in bidegree
(i, j) sits at (i + k, j) when the maps contract strands and at (i - k, j)
when they expand them.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

from ..algebra import (
    BettiTable,
    ChainComplex,
    ChainMap,
    FieldTag,
    LaurentPoly,
    Reduction,
    SparseMatrix,
    gauss_eliminate,
    row_reduce,
)
from ..algebra.chain import Degree, Key, Scalar
from ..cobordism import annulus_map, transport
from ..diagram import CableDiagram, LinkDiagram, cable, sub_cable_map
from ..errors import InvariantViolation, OutOfRange, UnknownComponent
from ..khovanov import betti_json, khovanov_homology
from ..pairings import (
    MultiPairing,
    Pairing,
    Square,
    added_pair,
    multi_arrows,
    multi_pairings,
    solve_satisfactory_signs,
    square_relation,
)

logger = logging.getLogger(__name__)

Arrow = Tuple[MultiPairing, MultiPairing]


class Variant(Enum):
    """The four ways of assembling the colored complex."""

    CONTRACT_FULL = "contract_full"
    CONTRACT_KERNEL = "contract_kernel"
    EXPAND_FULL = "expand_full"
    EXPAND_COKERNEL = "expand_cokernel"

    @classmethod
    def from_name(cls, name: str) -> "Variant":
        try:
            return cls(name.lower())
        except ValueError:
            raise OutOfRange(
                f"Invalid variant: {name}. Must be one of {[v.value for v in cls]}"
            ) from None

    @property
    def expands(self) -> bool:
        return self in (Variant.EXPAND_FULL, Variant.EXPAND_COKERNEL)

    @property
    def full(self) -> "Variant":
        return Variant.EXPAND_FULL if self.expands else Variant.CONTRACT_FULL


@dataclass
class ColoredComplex:
    """A colored complex together with the pieces it was assembled from.

    ``maps[(s, t)]`` is the unsigned transported annulus map for the arrow
    from ``s`` to its cover ``t``: H(D^s) -> H(D^t) when contracting and
    H(D^t) -> H(D^s) when expanding.
    """

    diagram: LinkDiagram
    colors: Tuple[int, ...]
    field: FieldTag
    variant: Variant
    cable: CableDiagram
    levels: Dict[int, List[MultiPairing]]
    reductions: Dict[MultiPairing, Reduction]
    marked: Dict[MultiPairing, Tuple[int, ...]]
    maps: Dict[Arrow, ChainMap]
    signs: Dict[Arrow, int]
    complex: ChainComplex
    distinguished: Optional[int] = None
    extra: Dict[str, Any] = dataclass_field(default_factory=dict)

    def term(self, s: MultiPairing) -> ChainComplex:
        return self.reductions[s].homology

    def pairing_degree(self, s: MultiPairing) -> int:
        k = sum(p.k for p in s)
        return -k if self.variant.expands else k

    def key_of(self, s: MultiPairing, key: Key) -> Key:
        """Position in the assembled complex of a generator of H(D^s)."""
        i, j, _ = key
        return self.complex.key_of(i + self.pairing_degree(s), j, (s, key))

    def betti(self) -> BettiTable:
        if self.complex.is_zero_differential():
            return BettiTable.of_complex(self.complex)
        return self.complex.betti()

    def euler_characteristic(self) -> LaurentPoly:
        return self.complex.euler_characteristic()

    def d0_block(self, i: int, j: int) -> SparseMatrix:
        """The part of the differential between pairing degrees 0 and 1 in bidegree (i, j).

        Contracting, it maps H(D^0) to the sum over covers; expanding, the
        sum over covers to H(D^0). Columns and rows follow ``levels`` order.
        """
        (bottom,) = self.levels[0]
        covers = self.levels.get(1, [])
        base = self.term(bottom)
        offsets: Dict[MultiPairing, int] = {}
        total = 0
        for t in covers:
            offsets[t] = total
            total += self.term(t).dim(i, j)
        entries: Dict[Tuple[int, int], Scalar] = {}
        for t in covers:
            sign = self.signs[(bottom, t)]
            f = self.maps[(bottom, t)]
            if self.variant.expands:
                for k in range(self.term(t).dim(i, j)):
                    for (_, _, r), v in f.image((i, j, k)).items():
                        entries[(r, offsets[t] + k)] = self.field.reduce(sign * v)
            else:
                for k in range(base.dim(i, j)):
                    for (_, _, r), v in f.image((i, j, k)).items():
                        entries[(offsets[t] + r, k)] = self.field.reduce(sign * v)
        if self.variant.expands:
            return SparseMatrix(base.dim(i, j), total, self.field, entries)
        return SparseMatrix(total, base.dim(i, j), self.field, entries)

    def to_json(self, table: Optional[BettiTable] = None) -> Dict[str, Any]:
        table = table if table is not None else self.betti()
        data = betti_json(
            table,
            variant=self.variant.value,
            colors=list(self.colors),
            pairing_degree_convention="i_minus_k" if self.variant.expands else "i_plus_k",
        )
        if self.distinguished is not None:
            data.update(reduced=True, distinguished=self.distinguished)
        return data


def _pairing_list(s: MultiPairing) -> List[List[Tuple[int, int]]]:
    return [p.as_list() for p in s]


def _marks(cable_diagram: CableDiagram, s: MultiPairing, distinguished: Optional[int]) -> Tuple[int, ...]:
    if distinguished is None:
        return ()
    _, renaming = sub_cable_map(cable_diagram, _pairing_list(s))
    n = cable_diagram.colors[distinguished]
    return tuple(
        sorted(renaming[cable_diagram.basepoints[(distinguished, k)]] for k in range(1, n + 1))
    )


def _arrow_map(
    cable_diagram: CableDiagram,
    s: MultiPairing,
    component: int,
    cover: MultiPairing,
    field: FieldTag,
    expand: bool,
    reductions: Dict[MultiPairing, Reduction],
    marked: Dict[MultiPairing, Tuple[int, ...]],
) -> ChainMap:
    m, _ = added_pair(s[component], cover[component])
    f = annulus_map(
        cable_diagram,
        _pairing_list(s),
        component,
        m,
        field,
        expand=expand,
        marked=marked[cover] if expand else marked[s],
    )
    source, target = (cover, s) if expand else (s, cover)
    if tuple(f.target.marked) != marked[target]:
        raise InvariantViolation(
            f"Marks moved to {f.target.marked} along the annulus, expected {marked[target]}"
        )
    return transport(f, reductions[source], reductions[target])


def _squares(
    levels: Dict[int, List[MultiPairing]],
    maps: Dict[Arrow, ChainMap],
    field: FieldTag,
    expand: bool,
) -> List[Square]:
    """Every square of arrows with the relation between its two composites."""
    squares = []
    for level in levels.values():
        for s in level:
            covers = [t for _, t in multi_arrows(s) if (s, t) in maps]
            for a_index, a in enumerate(covers):
                for b in covers[a_index + 1:]:
                    top = _join(s, a, b)
                    if top is None:
                        continue
                    paths = []
                    for middle in (a, b):
                        first, second = maps[(s, middle)], maps[(middle, top)]
                        if expand:
                            composite = first.compose(second)
                        else:
                            composite = second.compose(first)
                        paths.append(
                            {key: composite.image(key) for key in composite.source.keys()}
                        )
                    relation = square_relation(field, paths[0], paths[1])
                    squares.append(Square(((s, a), (a, top)), ((s, b), (b, top)), relation))
    return squares


def _join(s: MultiPairing, a: MultiPairing, b: MultiPairing) -> Optional[MultiPairing]:
    """The multi-pairing containing both covers ``a`` and ``b`` of ``s``, if there is one."""
    parts = []
    for ps, pa, pb in zip(s, a, b):
        pairs = set(pa.pairs) | set(pb.pairs)
        dots = [d for pair in pairs for d in pair]
        if len(dots) != len(set(dots)):
            return None
        parts.append(Pairing(ps.n, tuple(pairs)))
    return tuple(parts)


def _assemble(
    field: FieldTag,
    levels: Dict[int, List[MultiPairing]],
    reductions: Dict[MultiPairing, Reduction],
    maps: Dict[Arrow, ChainMap],
    signs: Dict[Arrow, int],
    expand: bool,
    name: str,
) -> ChainComplex:
    terms: Dict[Degree, List[Hashable]] = {}
    position: Dict[Tuple[MultiPairing, Key], Key] = {}
    for k, level in sorted(levels.items()):
        shift = -k if expand else k
        for s in level:
            homology = reductions[s].homology
            for key in homology.keys():
                i, j, _ = key
                labels = terms.setdefault((i + shift, j), [])
                position[(s, key)] = (i + shift, j, len(labels))
                labels.append((s, key))

    differential: Dict[Key, Dict[Key, Scalar]] = {}
    for (s, t), f in maps.items():
        sign = signs[(s, t)]
        source, target = (t, s) if expand else (s, t)
        for key in f.source.keys():
            image = f.image(key)
            if not image:
                continue
            row = differential.setdefault(position[(source, key)], {})
            for hit, value in image.items():
                slot = position[(target, hit)]
                row[slot] = field.reduce(row.get(slot, 0) + sign * value)
    return ChainComplex(field, terms, differential, check=True, name=name)


def _kernel_complex(full: ColoredComplex) -> ChainComplex:
    """ker(d0) on H(D^0), placed in pairing degree 0."""
    (bottom,) = full.levels[0]
    base = full.term(bottom)
    terms: Dict[Degree, List[Hashable]] = {}
    for i, j in base.degrees():
        block = full.d0_block(i, j)
        vectors = block.kernel_basis()
        terms[(i, j)] = [
            (bottom, tuple(sorted(((i, j, k), v) for k, v in vector.items())))
            for vector in vectors
        ]
    return ChainComplex(full.field, terms, name=f"ker d0 of {full.complex.name}")


def _cokernel_complex(full: ColoredComplex) -> ChainComplex:
    """coker of the last differential into H(D^0), spanned by non-pivot basis vectors."""
    (bottom,) = full.levels[0]
    base = full.term(bottom)
    terms: Dict[Degree, List[Hashable]] = {}
    for i, j in base.degrees():
        block = full.d0_block(i, j)
        columns = [c for c in block.columns() if c]
        _, pivots = row_reduce(columns, full.field)
        taken = set(pivots)
        terms[(i, j)] = [(bottom, (i, j, k)) for k in range(base.dim(i, j)) if k not in taken]
    return ChainComplex(full.field, terms, name=f"coker d-1 of {full.complex.name}")


def colored_complex(
    diagram: LinkDiagram,
    colors: Optional[Sequence[int]] = None,
    field: FieldTag = FieldTag.Q,
    variant: Variant = Variant.CONTRACT_FULL,
    distinguished: Optional[int] = None,
) -> ColoredComplex:
    """Build the colored complex of ``diagram``.

    With ``distinguished`` set, that component is never paired and its
    cable is marked at the basepoints in every term, which gives the
    reduced theory of links.
    """
    colors = tuple(diagram.colors if colors is None else colors)
    if len(colors) != diagram.n_components:
        raise UnknownComponent(f"{len(colors)} colors given for {diagram.n_components} components")
    if any(c < 0 for c in colors):
        raise OutOfRange(f"Colors must be non-negative: {colors}")
    if distinguished is not None and not 0 <= distinguished < len(colors):
        raise UnknownComponent(f"No component {distinguished}; diagram has {len(colors)}")
    expand = variant.expands
    cable_diagram = cable(diagram, colors)

    levels: Dict[int, List[MultiPairing]] = {}
    for k in range(sum(c // 2 for c in colors) + 1):
        level = [
            s
            for s in multi_pairings(colors, k)
            if distinguished is None or s[distinguished].k == 0
        ]
        if level:
            levels[k] = level

    reductions: Dict[MultiPairing, Reduction] = {}
    marked: Dict[MultiPairing, Tuple[int, ...]] = {}
    for level in levels.values():
        for s in level:
            sub, _ = sub_cable_map(cable_diagram, _pairing_list(s))
            marked[s] = _marks(cable_diagram, s, distinguished)
            _, reductions[s] = khovanov_homology(sub, field, marked[s])

    maps: Dict[Arrow, ChainMap] = {}
    for level in levels.values():
        for s in level:
            for component, cover in multi_arrows(s):
                if component == distinguished:
                    continue
                maps[(s, cover)] = _arrow_map(
                    cable_diagram, s, component, cover, field, expand, reductions, marked
                )

    if field is FieldTag.Q and maps:
        squares = _squares(levels, maps, field, expand)
        signs = solve_satisfactory_signs(sorted(maps), squares)
    else:
        signs = {arrow: 1 for arrow in maps}

    name = f"C_{list(colors)}({diagram!r})"
    full = ColoredComplex(
        diagram=diagram,
        colors=colors,
        field=field,
        variant=variant.full,
        cable=cable_diagram,
        levels=levels,
        reductions=reductions,
        marked=marked,
        maps=maps,
        signs=signs,
        complex=_assemble(field, levels, reductions, maps, signs, expand, name),
        distinguished=distinguished,
    )
    logger.debug(
        "Colored complex %s (%s): %d pairings, %d arrows, dim %d",
        name,
        variant.value,
        sum(len(level) for level in levels.values()),
        len(maps),
        full.complex.total_dim(),
    )
    if variant is Variant.CONTRACT_KERNEL:
        full.complex, full.variant = _kernel_complex(full), variant
    elif variant is Variant.EXPAND_COKERNEL:
        full.complex, full.variant = _cokernel_complex(full), variant
    return full


def colored_homology(
    diagram: LinkDiagram,
    colors: Optional[Sequence[int]] = None,
    field: FieldTag = FieldTag.Q,
    variant: Variant = Variant.CONTRACT_FULL,
) -> BettiTable:
    """Betti table of the colored complex."""
    complex_ = colored_complex(diagram, colors, field, variant).complex
    if complex_.is_zero_differential():
        return BettiTable.of_complex(complex_)
    homology, _ = gauss_eliminate(complex_)
    table = BettiTable.of_complex(homology)
    logger.info(
        "Colored homology of %r, colors %s, %s over %s: total rank %d",
        diagram,
        list(colors) if colors is not None else list(diagram.colors),
        variant.value,
        field.value,
        table.total_rank(),
    )
    return table


__all__ = ["Variant", "ColoredComplex", "colored_complex", "colored_homology"]
