"""Unit tests for exact arithmetic and chain complexes."""

from fractions import Fraction

import pytest

from src.algebra import (
    BettiTable,
    ChainComplex,
    ChainMap,
    FieldTag,
    LaurentPoly,
    RationalFn,
    SparseMatrix,
    eliminate_pairs,
    euler_characteristic,
    gauss_eliminate,
    gf2_solve,
    laurent_div_exact,
    quantum_integer,
    random_complex,
    set_check_limit,
    transport_map,
)
from src.errors import DegreeMismatch, InvariantViolation, NonDivisible, OutOfRange

q = LaurentPoly.q


class TestLaurentPoly:
    """Tests for Laurent polynomial arithmetic and formats."""

    def test_quantum_integer_small_values(self):
        """[1] = 1, [3] and [5] expand symmetrically."""
        assert quantum_integer(1) == 1
        assert quantum_integer(0).is_zero()
        assert quantum_integer(3) == q(2) + 1 + q(-2)
        assert quantum_integer(5) == LaurentPoly.parse("q^4 + q^2 + 1 + q^-2 + q^-4")

    def test_quantum_integer_identity(self):
        """[n](q - q^-1) = q^n - q^-n."""
        for n in range(1, 9):
            assert quantum_integer(n) * (q() - q(-1)) == q(n) - q(-n)

    def test_quantum_integer_negative(self):
        with pytest.raises(OutOfRange):
            quantum_integer(-1)

    def test_exact_division(self):
        """Exact quotients succeed and remainders raise."""
        three = quantum_integer(3)
        assert laurent_div_exact(three, LaurentPoly.constant(1)) == three
        assert laurent_div_exact(three * quantum_integer(2), three) == quantum_integer(2)
        with pytest.raises(NonDivisible):
            laurent_div_exact(q() + q(-1), q(2) + 1)

    def test_monomials_are_units(self):
        """Dividing by a power of q shifts; only non-unit divisors can leave a remainder."""
        assert laurent_div_exact(q() + q(-1), q(2)) == q(-1) + q(-3)
        assert laurent_div_exact(q(3), q(-2)) == q(5)
        with pytest.raises(NonDivisible):
            laurent_div_exact(q() + q(-1), q(2) * 2)

    def test_text_format(self):
        """Terms are written with descending exponents."""
        assert quantum_integer(3).to_text() == "q^2 + 1 + q^-2"
        jones = q(1) + q(3) + q(5) - q(9)
        assert jones.to_text() == "-q^9 + q^5 + q^3 + q"
        text = "q^9 - q^5 + 3*q - 2 + q^-1"
        assert LaurentPoly.parse(text).to_text() == text
        assert LaurentPoly().to_text() == "0"

    def test_json_format(self):
        assert quantum_integer(3).to_json() == {"poly": [[2, 1], [0, 1], [-2, 1]]}
        assert LaurentPoly.from_json({"poly": [[1, -1], [-1, 2]]}) == 2 * q(-1) - q(1)

    def test_bar_and_shift(self):
        assert (q(3) + 2).bar() == q(-3) + 2
        assert quantum_integer(2).shift(1) == q(2) + 1


class TestRationalFn:
    """Tests for rational functions in lowest terms."""

    def test_cancellation(self):
        assert RationalFn(q(2) - 1, q() - 1) == RationalFn(q() + 1)

    def test_inverse_of_quantum_two(self):
        inverse = RationalFn(1, quantum_integer(2))
        assert inverse * quantum_integer(2) == 1

    def test_as_laurent(self):
        product = RationalFn(quantum_integer(3) * quantum_integer(2))
        assert (product / quantum_integer(3)).as_laurent() == quantum_integer(2)
        assert RationalFn(1, -q()).as_laurent() == -q(-1)
        with pytest.raises(NonDivisible):
            RationalFn(1, quantum_integer(2)).as_laurent()

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            RationalFn(1, 0)


class TestSparseLinearAlgebra:
    """Tests for sparse matrices and the F2 solver."""

    def test_rank_depends_on_field(self):
        dense = [[1, 1], [1, -1]]
        assert SparseMatrix.from_dense(dense, FieldTag.Q).rank() == 2
        assert SparseMatrix.from_dense(dense, FieldTag.F2).rank() == 1

    def test_kernel_basis(self):
        matrix = SparseMatrix.from_dense([[1, 1]], FieldTag.Q)
        assert matrix.kernel_basis() == [{1: Fraction(1), 0: Fraction(-1)}]

    def test_product(self):
        a = SparseMatrix.from_dense([[1, 2], [0, 1]], FieldTag.Q)
        b = SparseMatrix.from_dense([[1, -2], [0, 1]], FieldTag.Q)
        assert a @ b == SparseMatrix.identity(2, FieldTag.Q)

    def test_q_scalars_stay_integral(self):
        """Integral rationals are plain ints; only proper fractions allocate a Fraction."""
        assert type(FieldTag.Q.reduce(Fraction(4, 2))) is int
        assert FieldTag.Q.reduce(Fraction(1, 2)) == Fraction(1, 2)
        assert type(FieldTag.Q.inverse(-1)) is int
        assert FieldTag.Q.inverse(2) == Fraction(1, 2)
        assert FieldTag.F2.reduce(Fraction(3)) == 1

    def test_gf2_solve(self):
        assert gf2_solve([(0b11, 1), (0b10, 1)], 2) == 0b10
        assert gf2_solve([(0b1, 0), (0b1, 1)], 1) is None
        assert gf2_solve([], 3) == 0


def _two_term(field):
    return ChainComplex(field, {(0, 0): ["a"], (1, 0): ["b"]}, {(0, 0, 0): {(1, 0, 0): 1}})


class TestChainComplex:
    """Tests for complexes, elimination and transport."""

    def test_square_must_vanish(self):
        terms = {(0, 0): ["a"], (1, 0): ["b"], (2, 0): ["c"]}
        differential = {(0, 0, 0): {(1, 0, 0): 1}, (1, 0, 0): {(2, 0, 0): 1}}
        with pytest.raises(InvariantViolation):
            ChainComplex(FieldTag.Q, terms, differential)

    def test_large_complexes_skip_the_square_check(self):
        terms = {(0, 0): ["a"], (1, 0): ["b"], (2, 0): ["c"]}
        differential = {(0, 0, 0): {(1, 0, 0): 1}, (1, 0, 0): {(2, 0, 0): 1}}
        previous = set_check_limit(1)
        try:
            ChainComplex(FieldTag.Q, terms, differential)
            with pytest.raises(InvariantViolation):
                ChainComplex(FieldTag.Q, terms, differential, check=True)
        finally:
            set_check_limit(previous)
        with pytest.raises(ValueError):
            set_check_limit(-1)

    def test_trusted_construction(self):
        """Trusted complexes drop empty terms and still check d o d when small."""
        terms = {(0, 0): ["a"], (1, 0): ["b"], (2, 0): []}
        complex_ = ChainComplex.trusted(FieldTag.F2, terms, {(0, 0, 0): {(1, 0, 0): 1}})
        assert complex_.degrees() == [(0, 0), (1, 0)]
        assert gauss_eliminate(complex_)[0].total_dim() == 0
        bad = {(0, 0): ["a"], (1, 0): ["b"], (2, 0): ["c"]}
        with pytest.raises(InvariantViolation):
            ChainComplex.trusted(FieldTag.F2, bad, {(0, 0, 0): {(1, 0, 0): 1}, (1, 0, 0): {(2, 0, 0): 1}})

    def test_pivot_prefers_units(self):
        """Of two targets the one hit by a unit is cancelled."""
        terms = {(0, 0): ["x"], (1, 0): ["a", "b"]}
        complex_ = ChainComplex(FieldTag.Q, terms, {(0, 0, 0): {(1, 0, 0): 2, (1, 0, 1): 1}})
        homology, reduction = gauss_eliminate(complex_)
        assert homology.labels(1, 0) == ("a",)
        reduction.check()

    def test_differential_degree(self):
        terms = {(0, 0): ["a"], (2, 0): ["c"]}
        with pytest.raises(DegreeMismatch):
            ChainComplex(FieldTag.Q, terms, {(0, 0, 0): {(2, 0, 0): 1}})

    def test_zero_differential_is_its_own_homology(self):
        complex_ = ChainComplex(FieldTag.F2, {(0, 1): ["x"], (0, -1): ["y"]})
        homology, reduction = gauss_eliminate(complex_)
        assert homology.dim(0, 1) == 1 and homology.dim(0, -1) == 1
        assert reduction.steps == []

    def test_two_term_cancels(self):
        for field in FieldTag:
            homology, reduction = gauss_eliminate(_two_term(field))
            assert homology.total_dim() == 0
            reduction.check()

    @pytest.mark.parametrize("field", list(FieldTag))
    @pytest.mark.parametrize("seed", range(8))
    def test_random_complex_homology(self, field, seed):
        """Elimination agrees with rank-nullity and the retract identities hold."""
        dims = {0: 3, 1: 5, 2: 4, 3: 2}
        complex_ = random_complex(field, dims, seed=seed)
        homology, reduction = gauss_eliminate(complex_)
        for i in dims:
            expected = (
                dims[i]
                - complex_.d_matrix(i, 0).rank()
                - (complex_.d_matrix(i - 1, 0).rank() if i - 1 in dims else 0)
            )
            assert homology.dim(i, 0) == expected
        reduction.check()
        assert homology.euler_characteristic() == complex_.euler_characteristic()

    def test_designated_pairs(self):
        """Cancelling a chosen pair keeps the rest of the differential."""
        terms = {(0, 0): ["a"], (1, 0): ["b", "c"], (2, 0): ["e"]}
        differential = {
            (0, 0, 0): {(1, 0, 0): 1, (1, 0, 1): 1},
            (1, 0, 0): {(2, 0, 0): 1},
            (1, 0, 1): {(2, 0, 0): 1},
        }
        complex_ = ChainComplex(FieldTag.F2, terms, differential)
        reduced, reduction = eliminate_pairs(complex_, [((0, 0, 0), (1, 0, 0))])
        assert reduced.total_dim() == 2
        assert reduced.differential_of((1, 0, 0)) == {(2, 0, 0): 1}
        reduction.check()
        with pytest.raises(InvariantViolation):
            eliminate_pairs(complex_, [((0, 0, 0), (2, 0, 0))])

    def test_transport_identity_and_zero(self):
        complex_ = random_complex(FieldTag.Q, {0: 2, 1: 3, 2: 1}, seed=3)
        homology, reduction = gauss_eliminate(complex_)
        induced = transport_map(ChainMap.identity(complex_), reduction, reduction)
        for i, j in homology.degrees():
            size = homology.dim(i, j)
            assert induced.matrix(i, j) == SparseMatrix.identity(size, FieldTag.Q)
        zero = transport_map(ChainMap.zero(complex_, complex_), reduction, reduction)
        assert zero.is_zero()

    def test_transport_requires_matching_reductions(self):
        first = _two_term(FieldTag.Q)
        second = _two_term(FieldTag.Q)
        _, r_first = gauss_eliminate(first)
        _, r_second = gauss_eliminate(second)
        with pytest.raises(DegreeMismatch):
            transport_map(ChainMap.identity(first), r_second, r_first)

    def test_chain_map_check(self):
        complex_ = _two_term(FieldTag.Q)
        bad = ChainMap(complex_, complex_, images={(0, 0, 0): {(0, 0, 0): 1}}, name="bad")
        with pytest.raises(InvariantViolation):
            bad.check()
        ChainMap.identity(complex_).check()


class TestBettiTable:
    """Tests for rank tables and Euler characteristics."""

    def test_euler_characteristic(self):
        assert euler_characteristic(BettiTable({}, FieldTag.Q)).is_zero()
        unknot = BettiTable({(0, -2): 1, (0, 0): 1, (0, 2): 1}, FieldTag.Q)
        assert euler_characteristic(unknot) == quantum_integer(3)
        assert euler_characteristic(BettiTable({(1, 0): 1}, FieldTag.F2)) == -1

    def test_json_and_poincare(self):
        table = BettiTable({(0, 1): 1, (2, 5): 2}, FieldTag.F2)
        assert BettiTable.from_json(table.to_json()) == table
        assert table.poincare().specialize_t(-1) == euler_characteristic(table)
        assert table.poincare().to_text() == "q + 2*t^2*q^5"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
