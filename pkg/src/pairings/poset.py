"""Pairings of neighbouring dots and the arrows between them.

Dots are numbered 1..n. A pairing is a set of disjoint pairs (m, m+1); an
arrow adds one more pair built from two adjacent single dots.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, List, Sequence, Tuple

from ..errors import NotACover, OutOfRange, PairingMismatch

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Pairing:
    """A k-pairing of n dots; ``pairs`` is kept sorted."""

    n: int
    pairs: Tuple[Pair, ...] = ()

    def __post_init__(self) -> None:
        pairs = tuple(sorted(tuple(p) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        used = set()
        for m, m_next in pairs:
            if m_next != m + 1 or not 1 <= m < self.n:
                raise PairingMismatch(f"Invalid pair ({m}, {m_next}) for {self.n} dots")
            if m in used or m_next in used:
                raise PairingMismatch(f"Pairs overlap at ({m}, {m_next})")
            used.update((m, m_next))

    @property
    def k(self) -> int:
        return len(self.pairs)

    def singles(self) -> Tuple[int, ...]:
        paired = {d for pair in self.pairs for d in pair}
        return tuple(d for d in range(1, self.n + 1) if d not in paired)

    def dots(self) -> frozenset:
        return frozenset(d for pair in self.pairs for d in pair)

    def with_pair(self, m: int) -> "Pairing":
        return Pairing(self.n, self.pairs + ((m, m + 1),))

    def as_list(self) -> List[Pair]:
        return list(self.pairs)

    def __str__(self) -> str:
        inner = ",".join(f"{a}{b}" for a, b in self.pairs)
        return f"{{{inner}}}/{self.n}"


def _pair_sets(n: int, k: int, start: int = 1) -> Iterator[Tuple[Pair, ...]]:
    if k == 0:
        yield ()
        return
    for m in range(start, n):
        for rest in _pair_sets(n, k - 1, m + 2):
            yield ((m, m + 1),) + rest


@lru_cache(maxsize=None)
def enumerate_pairings(n: int, k: int) -> Tuple[Pairing, ...]:
    """All k-pairings of n dots in lexicographic order; there are C(n-k, k)."""
    if n < 0 or not 0 <= k <= n // 2:
        raise OutOfRange(f"Invalid pair count {k} for {n} dots")
    result = tuple(Pairing(n, pairs) for pairs in _pair_sets(n, k))
    assert len(result) == comb(n - k, k)
    return result


def all_pairings(n: int) -> List[Pairing]:
    """Every pairing of n dots, by pair count."""
    return [s for k in range(n // 2 + 1) for s in enumerate_pairings(n, k)]


def arrows(s: Pairing) -> List[Pairing]:
    """The pairings with exactly one more pair than ``s`` that contain it."""
    singles = set(s.singles())
    return [s.with_pair(m) for m in sorted(singles) if m + 1 in singles]


def added_pair(s: Pairing, cover: Pairing) -> Pair:
    """The pair of ``cover`` missing from ``s``."""
    extra = set(cover.pairs) - set(s.pairs)
    if cover.n != s.n or len(extra) != 1 or not set(s.pairs) <= set(cover.pairs):
        raise NotACover(f"{cover} does not cover {s}")
    return extra.pop()


def left_pairs_sign(s: Pairing, cover: Pairing) -> int:
    """(-1) to the number of pairs of ``s`` left of the pair that ``cover`` adds."""
    m, _ = added_pair(s, cover)
    return -1 if sum(1 for a, _ in s.pairs if a < m) % 2 else 1


# Multi-pairings: one pairing per link component.

MultiPairing = Tuple[Pairing, ...]


def multi_pairings(colors: Sequence[int], k: int) -> List[MultiPairing]:
    """Multi-pairings with ``k`` pairs in total, ordered component by component."""
    result = []
    ranges = [range(c // 2 + 1) for c in colors]
    for split in itertools.product(*ranges):
        if sum(split) != k:
            continue
        for combo in itertools.product(*(enumerate_pairings(c, j) for c, j in zip(colors, split))):
            result.append(tuple(combo))
    return sorted(result, key=lambda s: [p.pairs for p in s])


def multi_arrows(s: MultiPairing) -> List[Tuple[int, MultiPairing]]:
    """(component, cover) for every arrow out of ``s``."""
    result = []
    for component, pairing in enumerate(s):
        for cover in arrows(pairing):
            result.append((component, s[:component] + (cover,) + s[component + 1:]))
    return result


def pairing_count(n: int) -> int:
    """Total number of pairings of n dots, a Fibonacci number."""
    return sum(comb(n - k, k) for k in range(n // 2 + 1))


def dimension_identity(n: int) -> int:
    """sum_k (-1)^k C(n-k, k) 2^(n-2k); equals n + 1."""
    return sum((-1) ** k * comb(n - k, k) * 2 ** (n - 2 * k) for k in range(n // 2 + 1))


__all__ = [
    "Pair",
    "Pairing",
    "MultiPairing",
    "enumerate_pairings",
    "all_pairings",
    "arrows",
    "added_pair",
    "left_pairs_sign",
    "multi_pairings",
    "multi_arrows",
    "pairing_count",
    "dimension_identity",
]
