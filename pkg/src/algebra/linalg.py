"""Exact sparse linear algebra over F2 and Q.

Scalars over F2 are the ints 0 and 1. Scalars over Q are ints while they
are integral and ``Fraction`` otherwise; the two compare and hash alike.
Every matrix carries its ``FieldTag`` and mixing fields is an error.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

Scalar = Union[int, Fraction]


class FieldTag(Enum):
    """Coefficient field of a computation."""

    F2 = "f2"
    Q = "q"

    @classmethod
    def from_name(cls, name: str) -> "FieldTag":
        valid = [tag.value for tag in cls]
        if name not in valid:
            raise ValueError(f"Invalid field: {name}. Must be one of {valid}")
        return cls(name)

    def reduce(self, value: Scalar) -> Scalar:
        if self is FieldTag.F2:
            if isinstance(value, Fraction):
                if value.denominator % 2 == 0:
                    raise ZeroDivisionError("Denominator vanishes in characteristic 2")
                value = value.numerator
            return int(value) % 2
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else value
        return int(value)

    def zero(self) -> Scalar:
        return self.reduce(0)

    def one(self) -> Scalar:
        return self.reduce(1)

    def inverse(self, value: Scalar) -> Scalar:
        if not value:
            raise ZeroDivisionError("Zero has no inverse")
        if self is FieldTag.F2:
            return 1
        if value == 1 or value == -1:
            return int(value)
        return 1 / Fraction(value)

    @property
    def characteristic(self) -> int:
        return 2 if self is FieldTag.F2 else 0


class SparseMatrix:
    """A rows x cols matrix with entries stored as {(row, col): scalar}."""

    __slots__ = ("rows", "cols", "field", "_entries")

    def __init__(
        self,
        rows: int,
        cols: int,
        field: FieldTag,
        entries: Optional[Mapping[Tuple[int, int], Scalar]] = None,
    ):
        self.rows = rows
        self.cols = cols
        self.field = field
        self._entries: Dict[Tuple[int, int], Scalar] = {}
        for (r, c), value in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"Entry ({r}, {c}) outside a {rows}x{cols} matrix")
            value = field.reduce(value)
            if value:
                self._entries[(r, c)] = value

    @classmethod
    def identity(cls, size: int, field: FieldTag) -> "SparseMatrix":
        return cls(size, size, field, {(k, k): 1 for k in range(size)})

    @classmethod
    def zero(cls, rows: int, cols: int, field: FieldTag) -> "SparseMatrix":
        return cls(rows, cols, field)

    @classmethod
    def from_columns(
        cls, rows: int, columns: Sequence[Mapping[int, Scalar]], field: FieldTag
    ) -> "SparseMatrix":
        entries: Dict[Tuple[int, int], Scalar] = {}
        for c, column in enumerate(columns):
            for r, value in column.items():
                entries[(r, c)] = value
        return cls(rows, len(columns), field, entries)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[Scalar]], field: FieldTag) -> "SparseMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {
            (r, c): value
            for r, row in enumerate(dense)
            for c, value in enumerate(row)
            if value
        }
        return cls(rows, cols, field, entries)

    def get(self, row: int, col: int) -> Scalar:
        return self._entries.get((row, col), self.field.zero())

    def items(self) -> List[Tuple[Tuple[int, int], Scalar]]:
        return sorted(self._entries.items())

    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def column(self, col: int) -> Dict[int, Scalar]:
        return {r: v for (r, c), v in self._entries.items() if c == col}

    def columns(self) -> List[Dict[int, Scalar]]:
        result: List[Dict[int, Scalar]] = [{} for _ in range(self.cols)]
        for (r, c), value in self._entries.items():
            result[c][r] = value
        return result

    def to_dense(self) -> List[List[Scalar]]:
        dense = [[self.field.zero() for _ in range(self.cols)] for _ in range(self.rows)]
        for (r, c), value in self._entries.items():
            dense[r][c] = value
        return dense

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.cols, self.rows, self.field, {(c, r): v for (r, c), v in self._entries.items()}
        )

    def _check_field(self, other: "SparseMatrix") -> None:
        if other.field is not self.field:
            raise ValueError(f"Field mismatch: {self.field.value} vs {other.field.value}")

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError(
                f"Shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        by_row: Dict[int, List[Tuple[int, Scalar]]] = {}
        for (r, c), value in other._entries.items():
            by_row.setdefault(r, []).append((c, value))
        product: Dict[Tuple[int, int], Scalar] = {}
        for (r, k), left in self._entries.items():
            for c, right in by_row.get(k, ()):
                product[(r, c)] = product.get((r, c), 0) + left * right
        return SparseMatrix(self.rows, other.cols, self.field, product)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("Shape mismatch in matrix sum")
        total: Dict[Tuple[int, int], Scalar] = dict(self._entries)
        for key, value in other._entries.items():
            total[key] = total.get(key, 0) + value
        return SparseMatrix(self.rows, self.cols, self.field, total)

    def scale(self, factor: Scalar) -> "SparseMatrix":
        return SparseMatrix(
            self.rows, self.cols, self.field, {k: v * factor for k, v in self._entries.items()}
        )

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (
            self.field is other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.field, tuple(self.items())))

    def apply(self, vector: Mapping[int, Scalar]) -> Dict[int, Scalar]:
        """Multiply by a sparse column vector {index: scalar}."""
        result: Dict[int, Scalar] = {}
        for (r, c), value in self._entries.items():
            if c in vector:
                result[r] = result.get(r, 0) + value * vector[c]
        return {r: self.field.reduce(v) for r, v in result.items() if self.field.reduce(v)}

    def rank(self) -> int:
        if self.field is FieldTag.F2:
            rows = [0] * self.rows
            for (r, c) in self._entries:
                rows[r] |= 1 << c
            return gf2_rank(rows, self.cols)
        return len(row_reduce(self.columns_as_rows(), self.field)[1])

    def columns_as_rows(self) -> List[Dict[int, Scalar]]:
        """Rows of the matrix as sparse dicts {col: value}."""
        rows: List[Dict[int, Scalar]] = [{} for _ in range(self.rows)]
        for (r, c), value in self._entries.items():
            rows[r][c] = value
        return rows

    def kernel_basis(self) -> List[Dict[int, Scalar]]:
        """A basis of the null space, each vector as {col: value}."""
        reduced, pivots = row_reduce(self.columns_as_rows(), self.field)
        pivot_cols = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_cols:
                continue
            vector: Dict[int, Scalar] = {free: self.field.one()}
            for row, pivot in zip(reduced, pivots):
                value = row.get(free)
                if value:
                    vector[pivot] = self.field.reduce(-value)
            basis.append(vector)
        return basis

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, {self.field.value}, nnz={self.nnz()})"


def row_reduce(
    rows: Iterable[Mapping[int, Scalar]], field: FieldTag
) -> Tuple[List[Dict[int, Scalar]], List[int]]:
    """Reduced row echelon form of sparse rows.

    Returns the nonzero reduced rows and their pivot columns, sorted by pivot.
    """
    work = [{c: field.reduce(v) for c, v in row.items() if field.reduce(v)} for row in rows]
    work = [row for row in work if row]
    reduced: List[Dict[int, Scalar]] = []
    pivots: List[int] = []
    while work:
        pivot_col = min(min(row) for row in work)
        index = next(k for k, row in enumerate(work) if pivot_col in row)
        pivot_row = work.pop(index)
        inverse = field.inverse(pivot_row[pivot_col])
        pivot_row = {c: field.reduce(v * inverse) for c, v in pivot_row.items()}
        for others in (work, reduced):
            for k, row in enumerate(others):
                factor = row.get(pivot_col)
                if factor:
                    updated = dict(row)
                    for c, v in pivot_row.items():
                        updated[c] = field.reduce(updated.get(c, 0) - factor * v)
                    others[k] = {c: v for c, v in updated.items() if v}
        work = [row for row in work if row]
        reduced.append(pivot_row)
        pivots.append(pivot_col)
    return reduced, pivots


def gf2_rank(rows: List[int], n_cols: int) -> int:
    """Rank over F2 of rows given as int bitsets."""
    work = rows[:]
    rank = 0
    row_idx = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        rank += 1
        row_idx += 1
        if row_idx == len(work):
            break
    return rank


def gf2_solve(equations: Sequence[Tuple[int, int]], n_vars: int) -> Optional[int]:
    """Solve a linear system over F2.

    Each equation is ``(mask, rhs)`` meaning the XOR of the variables whose
    bits are set in ``mask`` equals ``rhs``. Returns one solution as a bitset
    (free variables set to 0) or None when the system is inconsistent.
    """
    pivots: Dict[int, Tuple[int, int]] = {}
    for mask, rhs in equations:
        rhs &= 1
        for col in range(n_vars):
            if not (mask >> col) & 1:
                continue
            if col in pivots:
                pivot_mask, pivot_rhs = pivots[col]
                mask ^= pivot_mask
                rhs ^= pivot_rhs
            else:
                pivots[col] = (mask, rhs)
                break
        else:
            if rhs:
                return None
            continue
    solution = 0
    for col in sorted(pivots, reverse=True):
        mask, rhs = pivots[col]
        others = mask & ~(1 << col)
        value = rhs ^ (bin(others & solution).count("1") & 1)
        if value:
            solution |= 1 << col
    return solution


__all__ = [
    "Scalar",
    "FieldTag",
    "SparseMatrix",
    "row_reduce",
    "gf2_rank",
    "gf2_solve",
]
