"""Bigraded based chain complexes, chain maps and Gaussian elimination.

A generator is addressed by a key ``(i, j, k)``: cohomological degree ``i``,
quantum degree ``j`` and its position ``k`` in the basis of that term.
Vectors are sparse dicts ``{key: scalar}``. Differentials raise ``i`` by one
and preserve ``j``. Chain maps obey ``d f = f d`` with no Koszul signs.
"""

import logging
import random
from dataclasses import dataclass
from typing import (
    Callable,
    Dict,
    Hashable,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from ..errors import DegreeMismatch, InvariantViolation
from .laurent import LaurentPoly, TwoVarPoly
from .linalg import FieldTag, Scalar, SparseMatrix

logger = logging.getLogger(__name__)

Key = Tuple[int, int, int]
Degree = Tuple[int, int]
Vector = Dict[Key, Scalar]

# Complexes with more nonzero differential columns than this skip the d o d
# check unless it is asked for explicitly.
DEFAULT_CHECK_LIMIT = 20000
_check_limit = DEFAULT_CHECK_LIMIT


def set_check_limit(limit: int) -> int:
    """Set the automatic d o d check limit and return the previous one."""
    global _check_limit
    if limit < 0:
        raise ValueError(f"Check limit must be non-negative, got {limit}")
    previous, _check_limit = _check_limit, limit
    return previous


def accumulate(field: FieldTag, into: Vector, vector: Mapping[Key, Scalar], factor: Scalar = 1) -> Vector:
    """Add ``factor * vector`` into ``into`` in place and return it."""
    for key, value in vector.items():
        total = field.reduce(into.get(key, 0) + factor * value)
        if total:
            into[key] = total
        else:
            into.pop(key, None)
    return into


class ChainComplex:
    """A finite bigraded complex with a labelled basis in each term."""

    def __init__(
        self,
        field: FieldTag,
        terms: Mapping[Degree, Sequence[Hashable]],
        differential: Optional[Mapping[Key, Mapping[Key, Scalar]]] = None,
        check: Optional[bool] = None,
        name: str = "",
    ):
        self.field = field
        self.name = name
        self._terms: Dict[Degree, Tuple[Hashable, ...]] = {}
        self._index: Dict[Degree, Dict[Hashable, int]] = {}
        for degree, labels in terms.items():
            if not labels:
                continue
            labels = tuple(labels)
            index = {label: k for k, label in enumerate(labels)}
            if len(index) != len(labels):
                raise ValueError(f"Duplicate basis labels in term {degree}")
            self._terms[degree] = labels
            self._index[degree] = index

        self._d: Dict[Key, Dict[Key, Scalar]] = {}
        for source, image in (differential or {}).items():
            self._require_key(source)
            cleaned: Dict[Key, Scalar] = {}
            for target, value in image.items():
                self._require_key(target)
                if (target[0], target[1]) != (source[0] + 1, source[1]):
                    raise DegreeMismatch(
                        f"Differential maps {source[:2]} to {target[:2]}, expected "
                        f"{(source[0] + 1, source[1])}"
                    )
                value = field.reduce(value)
                if value:
                    cleaned[target] = value
            if cleaned:
                self._d[source] = cleaned

        if check or (check is None and len(self._d) <= _check_limit):
            self.check()

    @classmethod
    def trusted(
        cls,
        field: FieldTag,
        terms: Mapping[Degree, Sequence[Hashable]],
        differential: Dict[Key, Dict[Key, Scalar]],
        check: Optional[bool] = None,
        name: str = "",
    ) -> "ChainComplex":
        """Adopt an already reduced differential without validating its entries.

        Empty terms are dropped and the differential dicts are taken over as
        they are. ``check`` gates d o d as in the constructor.
        """
        complex_ = cls.__new__(cls)
        complex_.field = field
        complex_.name = name
        complex_._terms = {degree: tuple(labels) for degree, labels in terms.items() if labels}
        complex_._index = {
            degree: {label: k for k, label in enumerate(labels)}
            for degree, labels in complex_._terms.items()
        }
        complex_._d = {key: image for key, image in differential.items() if image}
        if check or (check is None and len(complex_._d) <= _check_limit):
            complex_.check()
        return complex_

    @classmethod
    def from_matrices(
        cls,
        field: FieldTag,
        terms: Mapping[Degree, Sequence[Hashable]],
        matrices: Mapping[Degree, SparseMatrix],
        check: Optional[bool] = None,
        name: str = "",
    ) -> "ChainComplex":
        """Build from one matrix per degree ``(i, j) -> (i + 1, j)``."""
        differential: Dict[Key, Dict[Key, Scalar]] = {}
        for (i, j), matrix in matrices.items():
            for (r, c), value in matrix.items():
                differential.setdefault((i, j, c), {})[(i + 1, j, r)] = value
        return cls(field, terms, differential, check=check, name=name)

    def _require_key(self, key: Key) -> None:
        i, j, k = key
        labels = self._terms.get((i, j), ())
        if not 0 <= k < len(labels):
            raise DegreeMismatch(f"Generator {key} does not exist")

    # Inspection

    def degrees(self) -> List[Degree]:
        return sorted(self._terms)

    def labels(self, i: int, j: int) -> Tuple[Hashable, ...]:
        return self._terms.get((i, j), ())

    def dim(self, i: int, j: int) -> int:
        return len(self._terms.get((i, j), ()))

    def total_dim(self) -> int:
        return sum(len(labels) for labels in self._terms.values())

    def keys(self) -> List[Key]:
        return [(i, j, k) for (i, j) in self.degrees() for k in range(self.dim(i, j))]

    def label(self, key: Key) -> Hashable:
        return self._terms[(key[0], key[1])][key[2]]

    def key_of(self, i: int, j: int, label: Hashable) -> Key:
        try:
            return (i, j, self._index[(i, j)][label])
        except KeyError:
            raise DegreeMismatch(f"No generator {label!r} in degree {(i, j)}") from None

    def has_label(self, i: int, j: int, label: Hashable) -> bool:
        return label in self._index.get((i, j), {})

    def differential_of(self, key: Key) -> Dict[Key, Scalar]:
        return self._d.get(key, {})

    def d(self, vector: Mapping[Key, Scalar]) -> Vector:
        result: Vector = {}
        for key, value in vector.items():
            image = self._d.get(key)
            if image:
                accumulate(self.field, result, image, value)
        return result

    def d_matrix(self, i: int, j: int) -> SparseMatrix:
        entries = {}
        for k in range(self.dim(i, j)):
            for (_, _, r), value in self._d.get((i, j, k), {}).items():
                entries[(r, k)] = value
        return SparseMatrix(self.dim(i + 1, j), self.dim(i, j), self.field, entries)

    def is_zero_differential(self) -> bool:
        return not self._d

    def check(self) -> None:
        """Verify d o d = 0."""
        for key in self._d:
            twice = self.d(self._d[key])
            if twice:
                raise InvariantViolation(
                    f"d o d is nonzero on generator {key} of complex {self.name or '?'}"
                )

    def euler_characteristic(self) -> LaurentPoly:
        coeffs: Dict[int, int] = {}
        for (i, j), labels in self._terms.items():
            coeffs[j] = coeffs.get(j, 0) + (-1) ** (i % 2) * len(labels)
        return LaurentPoly(coeffs)

    def betti(self) -> "BettiTable":
        homology, _ = gauss_eliminate(self)
        return BettiTable.of_complex(homology)

    # Constructions

    def shifted(self, di: int, dj: int, name: str = "") -> "ChainComplex":
        terms = {(i + di, j + dj): labels for (i, j), labels in self._terms.items()}
        differential = {
            (i + di, j + dj, k): {(a + di, b + dj, c): v for (a, b, c), v in image.items()}
            for (i, j, k), image in self._d.items()
        }
        return ChainComplex(self.field, terms, differential, check=False, name=name or self.name)

    def negated(self) -> "ChainComplex":
        """The same complex with differential -d."""
        differential = {
            key: {t: self.field.reduce(-v) for t, v in image.items()}
            for key, image in self._d.items()
        }
        return ChainComplex(self.field, self._terms, differential, check=False, name=self.name)

    def __repr__(self) -> str:
        return (
            f"ChainComplex({self.name or 'unnamed'}, {self.field.value}, "
            f"dim={self.total_dim()}, terms={len(self._terms)})"
        )


class ChainMap:
    """A linear map between complexes of fixed bidegree, given on basis keys.

    The images come either from an explicit table or from a callable that
    is evaluated lazily and cached.
    """

    def __init__(
        self,
        source: ChainComplex,
        target: ChainComplex,
        bidegree: Degree = (0, 0),
        images: Optional[Mapping[Key, Mapping[Key, Scalar]]] = None,
        func: Optional[Callable[[Key], Mapping[Key, Scalar]]] = None,
        name: str = "",
    ):
        if source.field is not target.field:
            raise ValueError("Chain map between complexes over different fields")
        self.source = source
        self.target = target
        self.bidegree = bidegree
        self.field = source.field
        self.name = name
        self._func = func
        self._cache: Dict[Key, Vector] = {}
        for key, image in (images or {}).items():
            self._cache[key] = self._validated(key, image)
        if images is not None and func is None:
            self._func = lambda key: {}

    def _validated(self, key: Key, image: Mapping[Key, Scalar]) -> Vector:
        di, dj = self.bidegree
        expected = (key[0] + di, key[1] + dj)
        cleaned: Vector = {}
        for target, value in image.items():
            if (target[0], target[1]) != expected:
                raise DegreeMismatch(
                    f"{self.name or 'map'} sends {key} to {target}, expected degree {expected}"
                )
            value = self.field.reduce(value)
            if value:
                cleaned[target] = value
        return cleaned

    @classmethod
    def identity(cls, complex_: ChainComplex) -> "ChainMap":
        return cls(complex_, complex_, (0, 0), func=lambda key: {key: 1}, name="id")

    @classmethod
    def zero(cls, source: ChainComplex, target: ChainComplex, bidegree: Degree = (0, 0)) -> "ChainMap":
        return cls(source, target, bidegree, func=lambda key: {}, name="0")

    def image(self, key: Key) -> Vector:
        if key not in self._cache:
            if self._func is None:
                raise ValueError(f"Chain map {self.name!r} has no rule for {key}")
            self._cache[key] = self._validated(key, self._func(key))
        return self._cache[key]

    def apply(self, vector: Mapping[Key, Scalar]) -> Vector:
        result: Vector = {}
        for key, value in vector.items():
            accumulate(self.field, result, self.image(key), value)
        return result

    def matrix(self, i: int, j: int) -> SparseMatrix:
        """The block from degree (i, j) to (i, j) + bidegree."""
        di, dj = self.bidegree
        entries = {}
        for k in range(self.source.dim(i, j)):
            for (_, _, r), value in self.image((i, j, k)).items():
                entries[(r, k)] = value
        return SparseMatrix(self.target.dim(i + di, j + dj), self.source.dim(i, j), self.field, entries)

    def matrices(self) -> Dict[Degree, SparseMatrix]:
        return {(i, j): self.matrix(i, j) for (i, j) in self.source.degrees()}

    def rank(self) -> int:
        return sum(block.rank() for block in self.matrices().values())

    def is_zero(self) -> bool:
        return all(not self.image(key) for key in self.source.keys())

    def compose(self, first: "ChainMap") -> "ChainMap":
        """Return ``self o first``."""
        if first.target is not self.source:
            raise DegreeMismatch("Composed chain maps do not share a middle complex")
        bidegree = (
            first.bidegree[0] + self.bidegree[0],
            first.bidegree[1] + self.bidegree[1],
        )
        return ChainMap(
            first.source,
            self.target,
            bidegree,
            func=lambda key: self.apply(first.image(key)),
            name=f"{self.name}*{first.name}",
        )

    def scaled(self, factor: Scalar) -> "ChainMap":
        return ChainMap(
            self.source,
            self.target,
            self.bidegree,
            func=lambda key: {t: v * factor for t, v in self.image(key).items()},
            name=self.name,
        )

    def __add__(self, other: "ChainMap") -> "ChainMap":
        if (other.source, other.target, other.bidegree) != (self.source, self.target, self.bidegree):
            raise DegreeMismatch("Cannot add chain maps with different endpoints")
        return ChainMap(
            self.source,
            self.target,
            self.bidegree,
            func=lambda key: accumulate(self.field, dict(self.image(key)), other.image(key)),
            name=f"{self.name}+{other.name}",
        )

    def equals(self, other: "ChainMap") -> bool:
        return all(self.image(key) == other.image(key) for key in self.source.keys())

    def check(self, limit: Optional[int] = None) -> None:
        """Verify d f = f d on (at most ``limit``) basis generators."""
        keys = self.source.keys()
        if limit is not None:
            keys = keys[:limit]
        for key in keys:
            left = self.target.d(self.image(key))
            right = self.apply(self.source.differential_of(key))
            if left != right:
                raise InvariantViolation(
                    f"{self.name or 'map'} does not commute with differentials at {key}"
                )

    def __repr__(self) -> str:
        return f"ChainMap({self.name or 'unnamed'}, bidegree={self.bidegree})"


@dataclass(frozen=True)
class EliminationStep:
    """One cancelled pair: ``d x = c y + sum(tx)`` and ``d s`` hits ``y`` via ``ys``."""

    x: Key
    y: Key
    c: Scalar
    tx: Tuple[Tuple[Key, Scalar], ...]
    ys: Tuple[Tuple[Key, Scalar], ...]


class Reduction:
    """Deformation retract of a complex, replayed from a step log.

    After full elimination the retract target is the homology; after
    ``eliminate_pairs`` it is a smaller complex that may keep a differential.
    """

    def __init__(
        self,
        source: ChainComplex,
        homology: ChainComplex,
        steps: List[EliminationStep],
        survivors: Mapping[Key, Key],
    ):
        self.source = source
        self.homology = homology
        self.steps = steps
        self.field = source.field
        self._to_homology = dict(survivors)
        self._from_homology = {h: key for key, h in survivors.items()}

    def project(self, vector: Mapping[Key, Scalar]) -> Vector:
        """p: source -> homology."""
        field = self.field
        work: Vector = {k: field.reduce(v) for k, v in vector.items() if field.reduce(v)}
        for step in self.steps:
            work.pop(step.x, None)
            coefficient = work.pop(step.y, None)
            if coefficient:
                accumulate(field, work, dict(step.tx), -coefficient * field.inverse(step.c))
        return {self._to_homology[key]: value for key, value in work.items()}

    def _include_from(self, work: Vector, start: int) -> Vector:
        field = self.field
        for step in reversed(self.steps[:start]):
            total = 0
            for s, value in step.ys:
                if s in work:
                    total += value * work[s]
            total = field.reduce(total)
            if total:
                work[step.x] = field.reduce(-total * field.inverse(step.c))
        return work

    def include(self, vector: Mapping[Key, Scalar]) -> Vector:
        """i: homology -> source."""
        field = self.field
        work = {
            self._from_homology[h]: field.reduce(value)
            for h, value in vector.items()
            if field.reduce(value)
        }
        return self._include_from(work, len(self.steps))

    def homotopy(self, vector: Mapping[Key, Scalar]) -> Vector:
        """h: source -> source of degree -1 with dh + hd = id - ip."""
        field = self.field
        work: Vector = dict(vector)
        result: Vector = {}
        for index, step in enumerate(self.steps):
            work.pop(step.x, None)
            coefficient = work.pop(step.y, None)
            if not coefficient:
                continue
            factor = coefficient * field.inverse(step.c)
            accumulate(field, result, self._include_from({step.x: field.reduce(factor)}, index))
            accumulate(field, work, dict(step.tx), -factor)
        return result

    def projection(self) -> ChainMap:
        return ChainMap(self.source, self.homology, func=lambda key: self.project({key: 1}), name="p")

    def inclusion(self) -> ChainMap:
        return ChainMap(self.homology, self.source, func=lambda key: self.include({key: 1}), name="i")

    def check(self, limit: Optional[int] = None) -> None:
        """Verify p o i = id and dh + hd = id - i o p."""
        field = self.field
        for h in self.homology.keys():
            if self.project(self.include({h: 1})) != {h: field.one()}:
                raise InvariantViolation(f"p o i differs from the identity at {h}")
        keys = self.source.keys()
        if limit is not None:
            keys = keys[:limit]
        for key in keys:
            lhs = self.source.d(self.homotopy({key: 1}))
            accumulate(field, lhs, self.homotopy(self.source.differential_of(key)))
            rhs: Vector = {key: field.one()}
            accumulate(field, rhs, self.include(self.project({key: 1})), -1)
            if lhs != rhs:
                raise InvariantViolation(f"dh + hd differs from id - ip at {key}")


class _EliminationGraph:
    """Mutable copy of a differential on which pairs are cancelled."""

    def __init__(self, complex_: ChainComplex):
        self.complex = complex_
        self.field = complex_.field
        self.keys = complex_.keys()
        self.d_out: Dict[Key, Dict[Key, Scalar]] = {}
        self.d_in: Dict[Key, Dict[Key, Scalar]] = {key: {} for key in self.keys}
        for key in self.keys:
            self.d_out[key] = dict(complex_.differential_of(key))
            for target, value in self.d_out[key].items():
                self.d_in[target][key] = value
        self.dead: set = set()
        self.steps: List[EliminationStep] = []

    def cancel(self, x: Key, y: Key) -> None:
        if x in self.dead or y in self.dead:
            raise InvariantViolation(f"Cannot cancel {x} -> {y}: generator already eliminated")
        c = self.d_out[x].get(y)
        if not c:
            raise InvariantViolation(f"Cannot cancel {x} -> {y}: coefficient is zero")
        field, d_out, d_in = self.field, self.d_out, self.d_in
        tx = {t: v for t, v in d_out[x].items() if t != y}
        ys = {s: v for s, v in d_in[y].items() if s != x}
        inverse = field.inverse(c)
        for s, ds in ys.items():
            row = d_out[s]
            for t, dt in tx.items():
                value = field.reduce(row.get(t, 0) - dt * ds * inverse)
                if value:
                    row[t] = value
                    d_in[t][s] = value
                else:
                    row.pop(t, None)
                    d_in[t].pop(s, None)
        for gone in (x, y):
            for t in d_out[gone]:
                d_in[t].pop(gone, None)
            for s in d_in[gone]:
                d_out[s].pop(gone, None)
            d_out[gone] = {}
            d_in[gone] = {}
            self.dead.add(gone)
        self.steps.append(
            EliminationStep(x, y, c, tuple(sorted(tx.items())), tuple(sorted(ys.items())))
        )

    def result(self, name: str) -> Tuple[ChainComplex, Reduction]:
        terms: Dict[Degree, List[Hashable]] = {}
        survivors: Dict[Key, Key] = {}
        for key in self.keys:
            if key in self.dead:
                continue
            i, j, _ = key
            labels = terms.setdefault((i, j), [])
            survivors[key] = (i, j, len(labels))
            labels.append(self.complex.label(key))
        differential = {
            survivors[key]: {survivors[t]: v for t, v in image.items()}
            for key, image in self.d_out.items()
            if image and key not in self.dead
        }
        reduced = ChainComplex.trusted(self.field, terms, differential, check=False, name=name)
        logger.debug(
            "Eliminated %d pairs from %s; %d generators survive",
            len(self.steps),
            self.complex.name or "complex",
            len(survivors),
        )
        return reduced, Reduction(self.complex, reduced, self.steps, survivors)


def _pivot(graph: _EliminationGraph, x: Key) -> Key:
    return min(
        graph.d_out[x].items(),
        key=lambda item: (item[1] not in (1, -1), len(graph.d_in[item[0]]), item[0]),
    )[0]


def gauss_eliminate(complex_: ChainComplex) -> Tuple[ChainComplex, Reduction]:
    """Cancel invertible differential entries until the differential vanishes.

    Columns are visited in key order. Each cancels against the target that
    creates the least fill-in: unit coefficients first, then the target with
    the fewest other sources, then the smallest key. The result is
    deterministic.
    """
    graph = _EliminationGraph(complex_)
    for x in graph.keys:
        if x not in graph.dead and graph.d_out[x]:
            graph.cancel(x, _pivot(graph, x))
    return graph.result(f"H({complex_.name})")


def eliminate_pairs(
    complex_: ChainComplex, pairs: Iterable[Tuple[Key, Key]], name: str = ""
) -> Tuple[ChainComplex, Reduction]:
    """Cancel the given ``(x, y)`` pairs in order; each ``d x`` must hit ``y`` invertibly.

    The result is a smaller homotopy equivalent complex, not necessarily
    with zero differential.
    """
    graph = _EliminationGraph(complex_)
    for x, y in pairs:
        graph.cancel(x, y)
    return graph.result(name or f"reduced({complex_.name})")


def transport_map(f: ChainMap, r_src: Reduction, r_tgt: Reduction) -> ChainMap:
    """The induced map p_tgt o f o i_src on homology."""
    if f.source is not r_src.source or f.target is not r_tgt.source:
        raise DegreeMismatch("Reductions do not match the endpoints of the chain map")
    return ChainMap(
        r_src.homology,
        r_tgt.homology,
        f.bidegree,
        func=lambda key: r_tgt.project(f.apply(r_src.include({key: 1}))),
        name=f"H({f.name})",
    )


class BettiTable:
    """Ranks of a bigraded vector space."""

    def __init__(self, ranks: Mapping[Degree, int], field: FieldTag):
        self.ranks: Dict[Degree, int] = {
            (int(i), int(j)): int(r) for (i, j), r in ranks.items() if r
        }
        self.field = field

    @classmethod
    def of_complex(cls, complex_: ChainComplex) -> "BettiTable":
        return cls({degree: complex_.dim(*degree) for degree in complex_.degrees()}, complex_.field)

    def rank(self, i: int, j: int) -> int:
        return self.ranks.get((i, j), 0)

    def total_rank(self) -> int:
        return sum(self.ranks.values())

    def degrees(self) -> List[Degree]:
        return sorted(self.ranks)

    def shifted(self, di: int, dj: int) -> "BettiTable":
        return BettiTable({(i + di, j + dj): r for (i, j), r in self.ranks.items()}, self.field)

    def poincare(self) -> TwoVarPoly:
        return TwoVarPoly(self.ranks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.ranks == other.ranks and self.field is other.field

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.ranks.items())), self.field))

    def to_json(self) -> Dict:
        return {
            "field": self.field.value,
            "ranks": [[i, j, r] for (i, j), r in sorted(self.ranks.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "BettiTable":
        return cls(
            {(i, j): r for i, j, r in data["ranks"]}, FieldTag.from_name(data["field"])
        )

    def to_text(self) -> str:
        """Grid with i across and j down, highest j first."""
        if not self.ranks:
            return "(zero)"
        columns = sorted({i for i, _ in self.ranks})
        rows = sorted({j for _, j in self.ranks}, reverse=True)
        width = max(4, max(len(str(r)) for r in self.ranks.values()) + 1)
        header = "j\\i".rjust(5) + "".join(str(i).rjust(width) for i in columns)
        lines = [header]
        for j in rows:
            cells = "".join(
                (str(self.rank(i, j)) if self.rank(i, j) else ".").rjust(width) for i in columns
            )
            lines.append(str(j).rjust(5) + cells)
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"BettiTable({self.field.value}, {dict(sorted(self.ranks.items()))})"


def euler_characteristic(table: BettiTable) -> LaurentPoly:
    """Sum of (-1)^i q^j rank(i, j)."""
    coeffs: Dict[int, int] = {}
    for (i, j), rank in table.ranks.items():
        coeffs[j] = coeffs.get(j, 0) + (-1) ** (i % 2) * rank
    return LaurentPoly(coeffs)


def direct_sum(
    field: FieldTag,
    parts: Sequence[Tuple[Hashable, ChainComplex]],
    name: str = "",
) -> Tuple[ChainComplex, Dict[Hashable, Dict[Key, Key]]]:
    """Direct sum with labels ``(tag, label)``; returns the key embeddings."""
    terms: Dict[Degree, List[Hashable]] = {}
    embeddings: Dict[Hashable, Dict[Key, Key]] = {}
    for tag, part in parts:
        embedding: Dict[Key, Key] = {}
        for key in part.keys():
            i, j, _ = key
            labels = terms.setdefault((i, j), [])
            embedding[key] = (i, j, len(labels))
            labels.append((tag, part.label(key)))
        embeddings[tag] = embedding
    differential: Dict[Key, Dict[Key, Scalar]] = {}
    for tag, part in parts:
        embedding = embeddings[tag]
        for key in part.keys():
            image = part.differential_of(key)
            if image:
                differential[embedding[key]] = {embedding[t]: v for t, v in image.items()}
    return ChainComplex(field, terms, differential, check=False, name=name), embeddings


def random_complex(field: FieldTag, dims: Mapping[int, int], seed: int = 0, mixing: int = 40) -> ChainComplex:
    """A random complex in quantum degree 0 with the given term dimensions.

    Starts from a sum of elementary pieces ``k -> k`` and isolated
    generators, then scrambles each term with random basis changes.
    """
    rng = random.Random(seed)
    degrees = sorted(dims)
    matrices: Dict[int, List[List[Scalar]]] = {}
    for i in degrees:
        matrices[i] = [[0] * dims[i] for _ in range(dims.get(i + 1, 0))]
    used: Dict[int, int] = {i: 0 for i in degrees}
    for i in degrees:
        free_here = dims[i] - used[i]
        free_next = dims.get(i + 1, 0)
        pairs = rng.randint(0, min(free_here, free_next)) if free_next else 0
        for p in range(pairs):
            column = used[i] + p
            value = 1 if field is FieldTag.F2 else rng.choice([1, -1, 2, -3])
            matrices[i][p][column] = value
        used[i] += pairs
        if i + 1 in used:
            used[i + 1] = pairs

    def scalar() -> Scalar:
        return 1 if field is FieldTag.F2 else rng.choice([1, -1, 2])

    for _ in range(mixing):
        i = rng.choice(degrees)
        if dims[i] < 2:
            continue
        a, b = rng.sample(range(dims[i]), 2)
        lam = scalar()
        # basis change P = 1 + lam E_ab: d_i <- d_i P and d_{i-1} <- P^-1 d_{i-1}
        for row in matrices[i]:
            row[b] = row[b] + lam * row[a]
        if i - 1 in matrices:
            below = matrices[i - 1]
            below[a] = [x - lam * y for x, y in zip(below[a], below[b])]

    terms = {(i, 0): list(range(dims[i])) for i in degrees if dims[i]}
    sparse = {
        (i, 0): SparseMatrix.from_dense(matrices[i], field) if matrices[i] else SparseMatrix(0, dims[i], field)
        for i in degrees
        if dims[i] and dims.get(i + 1, 0)
    }
    return ChainComplex.from_matrices(field, terms, sparse, name=f"random[{seed}]")


__all__ = [
    "Key",
    "Degree",
    "Vector",
    "accumulate",
    "DEFAULT_CHECK_LIMIT",
    "set_check_limit",
    "ChainComplex",
    "ChainMap",
    "EliminationStep",
    "Reduction",
    "gauss_eliminate",
    "eliminate_pairs",
    "transport_map",
    "BettiTable",
    "euler_characteristic",
    "direct_sum",
    "random_complex",
]
