"""Tensor powers of the defining sl(2) representation at q = 1.

A basis vector of V_1^{(x)m} is a bit string of length m read left to right;
bit 1 is the highest weight vector v+ and bit 0 is v-. The vector with
bits b_1 ... b_m has index sum b_p 2^(m - p).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from ..algebra import FieldTag, SparseMatrix
from ..errors import OutOfRange

PLUS = 1
MINUS = 0


def bits_of(index: int, m: int) -> Tuple[int, ...]:
    return tuple((index >> (m - 1 - p)) & 1 for p in range(m))


def index_of(bits: Tuple[int, ...]) -> int:
    index = 0
    for bit in bits:
        index = (index << 1) | bit
    return index


def weight(index: int, m: int) -> int:
    """H-eigenvalue: number of v+ minus number of v-."""
    plus = bin(index).count("1")
    return plus - (m - plus)


@dataclass(frozen=True)
class TensorSpace:
    """V_1^{(x)m} with the coproduct actions of E, F and H."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise OutOfRange(f"Tensor exponent must be non-negative: {self.m}")

    @property
    def dim(self) -> int:
        return 1 << self.m

    def basis(self):
        return range(self.dim)

    def weights(self) -> Dict[int, int]:
        return {b: weight(b, self.m) for b in self.basis()}

    @property
    def E(self) -> SparseMatrix:
        return _raising(self.m, True)

    @property
    def F(self) -> SparseMatrix:
        return _raising(self.m, False)

    @property
    def H(self) -> SparseMatrix:
        return SparseMatrix(
            self.dim, self.dim, FieldTag.Q, {(b, b): weight(b, self.m) for b in self.basis()}
        )

    def operator(self, name: str) -> SparseMatrix:
        try:
            return {"E": self.E, "F": self.F, "H": self.H}[name]
        except KeyError:
            raise OutOfRange(f"Unknown sl2 generator: {name}. Must be one of ['E', 'F', 'H']") from None

    def commutators_hold(self) -> bool:
        """[E, F] = H, [H, E] = 2E and [H, F] = -2F."""
        E, F, H = self.E, self.F, self.H
        return (
            E @ F - F @ E == H
            and H @ E - E @ H == E.scale(2)
            and H @ F - F @ H == F.scale(-2)
        )


@lru_cache(maxsize=None)
def _raising(m: int, raising: bool) -> SparseMatrix:
    """Sum over sites of E (v- to v+) or F (v+ to v-) acting on one tensor factor."""
    entries: Dict[Tuple[int, int], int] = {}
    source_bit, target_bit = (MINUS, PLUS) if raising else (PLUS, MINUS)
    for b in range(1 << m):
        bits = bits_of(b, m)
        for p in range(m):
            if bits[p] == source_bit:
                image = bits[:p] + (target_bit,) + bits[p + 1:]
                entries[(index_of(image), b)] = 1
    return SparseMatrix(1 << m, 1 << m, FieldTag.Q, entries)


@lru_cache(maxsize=None)
def contraction_h(m: int, position: int) -> SparseMatrix:
    """Antisymmetrization of slots ``position`` and ``position + 1`` (1-based).

    v+ v- goes to 1, v- v+ to -1 and equal vectors to 0; the other slots
    are left alone. The result maps V_1^{(x)m} onto V_1^{(x)(m-2)}.
    """
    if not 1 <= position < m:
        raise OutOfRange(f"Cannot contract slots ({position}, {position + 1}) of {m}")
    entries: Dict[Tuple[int, int], int] = {}
    p = position - 1
    for b in range(1 << m):
        bits = bits_of(b, m)
        pair = (bits[p], bits[p + 1])
        if pair[0] == pair[1]:
            continue
        rest = bits[:p] + bits[p + 2:]
        entries[(index_of(rest), b)] = 1 if pair == (PLUS, MINUS) else -1
    return SparseMatrix(1 << (m - 2), 1 << m, FieldTag.Q, entries)


__all__ = ["PLUS", "MINUS", "TensorSpace", "bits_of", "index_of", "weight", "contraction_h"]
