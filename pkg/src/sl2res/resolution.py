"""The complex resolving V_n by tensor powers of V_1, and its verification.

The term of degree k is the sum over k-pairings s of n dots of
V_1^{(x)(n-2k)}, one tensor factor per single dot of s. An arrow s -> s'
contracts the two factors of the added pair and carries the sign
(-1)^(pairs of s left of it).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Hashable, List, Tuple

from ..algebra import BettiTable, ChainComplex, FieldTag, SparseMatrix, gauss_eliminate
from ..errors import OutOfRange
from ..pairings import Pairing, added_pair, arrows, dimension_identity, enumerate_pairings, left_pairs_sign
from .tensor import TensorSpace, contraction_h, weight

logger = logging.getLogger(__name__)

GENERATORS = ("E", "F", "H")


@dataclass(frozen=True)
class ResolutionComplex:
    """C_n with every degree flattened into one vector space.

    ``offsets[k][s]`` is where the summand of ``s`` starts inside degree
    ``k``; ``d[k]`` maps degree k to degree k + 1.
    """

    n: int
    terms: Dict[int, Tuple[Pairing, ...]]
    offsets: Dict[int, Dict[Pairing, int]]
    dims: Dict[int, int]
    d: Dict[int, SparseMatrix]

    def degrees(self) -> List[int]:
        return sorted(self.terms)

    def summand(self, s: Pairing) -> TensorSpace:
        return TensorSpace(len(s.singles()))

    def operator(self, k: int, name: str) -> SparseMatrix:
        """E, F or H acting diagonally on the degree-k term."""
        entries: Dict[Tuple[int, int], int] = {}
        for s in self.terms[k]:
            start = self.offsets[k][s]
            for (r, c), value in self.summand(s).operator(name).items():
                entries[(start + r, start + c)] = value
        return SparseMatrix(self.dims[k], self.dims[k], FieldTag.Q, entries)

    def weight_of(self, k: int, index: int) -> int:
        for s in reversed(self.terms[k]):
            start = self.offsets[k][s]
            if index >= start:
                return weight(index - start, len(s.singles()))
        raise OutOfRange(f"Index {index} outside degree {k}")

    def chain_complex(self) -> ChainComplex:
        """The same complex bigraded by (degree, weight); h preserves weights."""
        terms: Dict[Tuple[int, int], List[Hashable]] = {}
        position: Dict[Tuple[int, int], Tuple[int, int, int]] = {}
        for k in self.degrees():
            for index in range(self.dims[k]):
                w = self.weight_of(k, index)
                labels = terms.setdefault((k, w), [])
                position[(k, index)] = (k, w, len(labels))
                labels.append(index)
        differential: Dict[Tuple[int, int, int], Dict[Tuple[int, int, int], int]] = {}
        for k, matrix in self.d.items():
            for (r, c), value in matrix.items():
                row = differential.setdefault(position[(k, c)], {})
                row[position[(k + 1, r)]] = value
        return ChainComplex(FieldTag.Q, terms, differential, name=f"C_{self.n}")


@lru_cache(maxsize=None)
def build_Cn(n: int) -> ResolutionComplex:
    """The signed complex C_n over Q."""
    if n < 0:
        raise OutOfRange(f"n must be non-negative: {n}")
    terms: Dict[int, Tuple[Pairing, ...]] = {}
    offsets: Dict[int, Dict[Pairing, int]] = {}
    dims: Dict[int, int] = {}
    for k in range(n // 2 + 1):
        terms[k] = enumerate_pairings(n, k)
        offsets[k] = {}
        total = 0
        for s in terms[k]:
            offsets[k][s] = total
            total += 1 << (n - 2 * k)
        dims[k] = total

    d: Dict[int, SparseMatrix] = {}
    for k in range(n // 2):
        entries: Dict[Tuple[int, int], int] = {}
        for s in terms[k]:
            singles = s.singles()
            for cover in arrows(s):
                m, _ = added_pair(s, cover)
                h = contraction_h(len(singles), singles.index(m) + 1)
                sign = left_pairs_sign(s, cover)
                row0, col0 = offsets[k + 1][cover], offsets[k][s]
                for (r, c), value in h.items():
                    entries[(row0 + r, col0 + c)] = entries.get((row0 + r, col0 + c), 0) + sign * value
        d[k] = SparseMatrix(dims[k + 1], dims[k], FieldTag.Q, entries)
    logger.debug("Built C_%d with term dimensions %s", n, [dims[k] for k in sorted(dims)])
    return ResolutionComplex(n, terms, offsets, dims, d)


def d_squared_zero(complex_: ResolutionComplex) -> bool:
    return all(
        (complex_.d[k + 1] @ complex_.d[k]).is_zero() for k in complex_.d if k + 1 in complex_.d
    )


def equivariance_residuals(complex_: ResolutionComplex) -> Dict[str, int]:
    """Nonzero entries of d X - X d for each generator X."""
    residuals = {name: 0 for name in GENERATORS}
    for k, matrix in complex_.d.items():
        for name in GENERATORS:
            defect = matrix @ complex_.operator(k, name) - complex_.operator(k + 1, name) @ matrix
            residuals[name] += defect.nnz()
    return residuals


def _symmetric_vectors(n: int) -> List[Dict[int, int]]:
    """For each weight, the sum of all basis vectors of V_1^{(x)n} of that weight."""
    by_weight: Dict[int, Dict[int, int]] = {}
    for b in range(1 << n):
        by_weight.setdefault(weight(b, n), {})[b] = 1
    return [by_weight[w] for w in sorted(by_weight, reverse=True)]


def symmetric_power_check(complex_: ResolutionComplex) -> bool:
    """H^0 is the symmetric power: right dimension and every symmetric tensor is a cycle."""
    n = complex_.n
    if 0 not in complex_.d:
        return complex_.dims[0] == n + 1
    d0 = complex_.d[0]
    kernel_dim = d0.cols - d0.rank()
    return kernel_dim == n + 1 and all(not d0.apply(v) for v in _symmetric_vectors(n))


def subcomplex_check(n: int) -> bool:
    """Pairings containing (1, 2) span a copy of C_{n-2} shifted up by one.

    Every differential inside the copy picks up one extra sign from the
    pair (1, 2), so the blocks are those of C_{n-2} negated.
    """
    if n < 2:
        return True
    big, small = build_Cn(n), build_Cn(n - 2)
    for k, matrix in small.d.items():
        block = big.d[k + 1]
        entries: Dict[Tuple[int, int], int] = {}
        for s in small.terms[k]:
            lifted = _lift(s, n)
            for cover in arrows(s):
                lifted_cover = _lift(cover, n)
                size_s = 1 << (n - 2 - 2 * k)
                size_t = 1 << (n - 2 - 2 * (k + 1))
                for r in range(size_t):
                    for c in range(size_s):
                        value = block.get(big.offsets[k + 2][lifted_cover] + r, big.offsets[k + 1][lifted] + c)
                        if value:
                            entries[(small.offsets[k + 1][cover] + r, small.offsets[k][s] + c)] = value
        restricted = SparseMatrix(matrix.rows, matrix.cols, FieldTag.Q, entries)
        if restricted != -matrix:
            return False
    return True


def _lift(s: Pairing, n: int) -> Pairing:
    return Pairing(n, ((1, 2),) + tuple((a + 2, b + 2) for a, b in s.pairs))


def verify_resolution(n: int) -> Dict[str, Any]:
    """Acyclicity away from degree 0, H^0 = V_n and exact equivariance."""
    complex_ = build_Cn(n)
    homology, _ = gauss_eliminate(complex_.chain_complex())
    table = BettiTable.of_complex(homology)
    higher = {i: sum(r for (a, _), r in table.ranks.items() if a == i) for i in complex_.degrees() if i}
    weights = sorted(
        (w for (i, w), r in table.ranks.items() if i == 0 for _ in range(r)), reverse=True
    )
    residuals = equivariance_residuals(complex_)
    euler = sum((-1) ** k * complex_.dims[k] for k in complex_.degrees())
    report: Dict[str, Any] = {
        "n": n,
        "dims": [complex_.dims[k] for k in complex_.degrees()],
        "h0_dim": len(weights),
        "higher_vanish": not any(higher.values()),
        "weights": weights,
        "residuals": residuals,
        "d_squared_zero": d_squared_zero(complex_),
        "symmetric_power": symmetric_power_check(complex_),
        "euler": euler,
    }
    report["passed"] = (
        report["higher_vanish"]
        and report["h0_dim"] == n + 1
        and weights == list(range(n, -n - 1, -2))
        and not any(residuals.values())
        and report["d_squared_zero"]
        and report["symmetric_power"]
        and euler == dimension_identity(n) == n + 1
    )
    logger.info("Resolution check for n=%d: %s", n, "pass" if report["passed"] else "FAIL")
    return report


__all__ = [
    "GENERATORS",
    "ResolutionComplex",
    "build_Cn",
    "d_squared_zero",
    "equivariance_residuals",
    "symmetric_power_check",
    "subcomplex_check",
    "verify_resolution",
]
