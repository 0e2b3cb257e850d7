"""Unit tests for pairings, arrows and sign assignments."""

import pytest

from src.algebra import FieldTag
from src.errors import InconsistentSquares, NonProportionalSquare, NotACover, OutOfRange, PairingMismatch
from src.pairings import (
    Pairing,
    Square,
    added_pair,
    all_pairings,
    arrows,
    dimension_identity,
    enumerate_pairings,
    is_satisfactory,
    left_pairs_sign,
    multi_arrows,
    multi_pairings,
    pairing_count,
    solve_satisfactory_signs,
    square_relation,
)


class TestPairing:
    """Tests for single pairings of n dots."""

    def test_pairs_are_sorted(self):
        s = Pairing(5, ((4, 5), (1, 2)))
        assert s.pairs == ((1, 2), (4, 5))
        assert s.k == 2
        assert s.singles() == (3,)
        assert s.dots() == frozenset({1, 2, 4, 5})
        assert str(s) == "{12,45}/5"

    def test_invalid_pairs(self):
        """Pairs must be neighbours inside 1..n and may not overlap."""
        with pytest.raises(PairingMismatch):
            Pairing(4, ((1, 3),))
        with pytest.raises(PairingMismatch):
            Pairing(4, ((4, 5),))
        with pytest.raises(PairingMismatch):
            Pairing(4, ((1, 2), (2, 3)))

    @pytest.mark.parametrize("n", range(9))
    def test_counts(self, n):
        """There are C(n - k, k) k-pairings."""
        for k in range(n // 2 + 1):
            assert len(enumerate_pairings(n, k)) == len(set(enumerate_pairings(n, k)))
        assert len(all_pairings(n)) == pairing_count(n)

    def test_fibonacci(self):
        assert [pairing_count(n) for n in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]

    def test_lexicographic_order(self):
        assert [s.pairs for s in enumerate_pairings(4, 1)] == [((1, 2),), ((2, 3),), ((3, 4),)]
        assert enumerate_pairings(4, 2) == (Pairing(4, ((1, 2), (3, 4))),)

    def test_pair_count_out_of_range(self):
        with pytest.raises(OutOfRange):
            enumerate_pairings(3, 2)

    @pytest.mark.parametrize("n", range(13))
    def test_dimension_identity(self, n):
        """The alternating dimension sum of the resolution is n + 1."""
        assert dimension_identity(n) == n + 1


class TestArrows:
    """Tests for covers and their signs."""

    def test_arrows_add_one_pair(self):
        s = Pairing(5, ((2, 3),))
        assert arrows(s) == [Pairing(5, ((2, 3), (4, 5)))]
        assert len(arrows(Pairing(4))) == 3

    def test_added_pair(self):
        s = Pairing(4, ((1, 2),))
        assert added_pair(s, Pairing(4, ((1, 2), (3, 4)))) == (3, 4)
        with pytest.raises(NotACover):
            added_pair(s, Pairing(4, ((2, 3),)))
        with pytest.raises(NotACover):
            added_pair(Pairing(4), Pairing(4, ((1, 2), (3, 4))))

    def test_left_pairs_sign(self):
        """The sign counts pairs of the source to the left of the new one."""
        s = Pairing(6, ((3, 4),))
        assert left_pairs_sign(s, s.with_pair(1)) == 1
        assert left_pairs_sign(s, s.with_pair(5)) == -1
        t = Pairing(6, ((1, 2), (3, 4)))
        assert left_pairs_sign(t, t.with_pair(5)) == 1


class TestMultiPairings:
    """Tests for one pairing per component."""

    def test_levels(self):
        assert len(multi_pairings((2, 2), 0)) == 1
        assert len(multi_pairings((2, 2), 1)) == 2
        assert len(multi_pairings((2, 2), 2)) == 1
        assert multi_pairings((2, 2), 3) == []

    def test_multi_arrows(self):
        (bottom,) = multi_pairings((2, 3), 0)
        assert [component for component, _ in multi_arrows(bottom)] == [0, 1, 1]


class TestSigns:
    """Tests for the F2 system choosing arrow signs."""

    def test_square_relation(self):
        q, f2 = FieldTag.Q, FieldTag.F2
        key, target = (0, 0, 0), (1, 0, 0)
        assert square_relation(q, {key: {target: 1}}, {key: {target: 1}}) == 1
        assert square_relation(q, {key: {target: 1}}, {key: {target: -1}}) == -1
        assert square_relation(f2, {key: {target: 1}}, {key: {target: 1}}) == 1
        assert square_relation(q, {key: {}}, {}) is None
        with pytest.raises(NonProportionalSquare):
            square_relation(q, {key: {target: 1}}, {key: {target: 2}})

    def test_solve(self):
        """Commuting squares get an odd number of flips, anticommuting ones an even number."""
        arrows_ = ["a", "b", "c", "d", "e", "f"]
        squares = [
            Square(("a", "b"), ("c", "d"), 1),
            Square(("c", "d"), ("e", "f"), -1),
            Square(("a", "e"), ("b", "f"), None),
        ]
        signs = solve_satisfactory_signs(arrows_, squares)
        assert set(signs) == set(arrows_)
        assert set(signs.values()) <= {1, -1}
        assert is_satisfactory(signs, squares)

    def test_unsatisfiable(self):
        squares = [Square(("a", "b"), ("c", "d"), 1), Square(("a", "c"), ("b", "d"), -1)]
        with pytest.raises(InconsistentSquares):
            solve_satisfactory_signs(["a", "b", "c", "d"], squares)

    def test_is_satisfactory(self):
        square = Square(("a", "b"), ("c", "d"), 1)
        assert not is_satisfactory({"a": 1, "b": 1, "c": 1, "d": 1}, [square])
        assert is_satisfactory({"a": -1, "b": 1, "c": 1, "d": 1}, [square])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
