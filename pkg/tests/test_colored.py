"""Unit tests for colored complexes and their variants."""

import pytest

from src.algebra import FieldTag, quantum_integer
from src.colored import (
    Variant,
    colored_complex,
    colored_homology,
    compare_variants,
    euler_matches_oracle,
    framed_unknot,
    framed_unknot_ranks,
    long_exact_sequence_check,
    same_colored_homology,
)
from src.diagram import R3, braid_closure, load_knot, reverse_component
from src.errors import OutOfRange, UnknownComponent
from src.oracle import colored_jones

Q, F2 = FieldTag.Q, FieldTag.F2


class TestVariant:
    def test_from_name(self):
        assert Variant.from_name("EXPAND_FULL") is Variant.EXPAND_FULL
        assert Variant.from_name("contract_kernel") is Variant.CONTRACT_KERNEL
        with pytest.raises(OutOfRange):
            Variant.from_name("both")

    def test_full_variant(self):
        assert Variant.CONTRACT_KERNEL.full is Variant.CONTRACT_FULL
        assert Variant.EXPAND_COKERNEL.full is Variant.EXPAND_FULL
        assert Variant.EXPAND_COKERNEL.expands
        assert not Variant.CONTRACT_FULL.expands


class TestColoredComplex:
    """Tests for the assembled complexes."""

    def test_color_zero(self):
        """Deleting the only component leaves the empty diagram."""
        table = colored_homology(load_knot("unknot"), (0,))
        assert table.ranks == {(0, 0): 1}

    def test_color_one_is_khovanov(self):
        table = colored_homology(load_knot("trefoil"), (1,))
        assert table.ranks == {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}

    @pytest.mark.parametrize("field", [Q, F2])
    def test_two_colored_unknot(self, field):
        """H_2 of the unknot is V_2 up to grading: q^2 + 1 + q^-2."""
        complex_ = colored_complex(load_knot("unknot"), (2,), field)
        assert complex_.betti().ranks == {(0, -2): 1, (0, 0): 1, (0, 2): 1}
        assert complex_.euler_characteristic() == quantum_integer(3)

    def test_levels_and_pairing_degree(self):
        complex_ = colored_complex(load_knot("unknot"), (3,), Q)
        assert [len(complex_.levels[k]) for k in sorted(complex_.levels)] == [1, 2]
        (top, _) = complex_.levels[1]
        assert complex_.pairing_degree(top) == 1
        expand = colored_complex(load_knot("unknot"), (3,), Q, Variant.EXPAND_FULL)
        assert expand.pairing_degree(top) == -1

    def test_differential_squares_to_zero(self):
        """Signs solved over Q make every square anticommute."""
        complex_ = colored_complex(load_knot("hopf+"), (2, 2), Q)
        complex_.complex.check()
        assert set(complex_.signs.values()) <= {1, -1}

    @pytest.mark.parametrize(
        "name, colors",
        [
            ("unknot", (3,)),
            ("unknot_kink+", (2,)),
            ("unknot_kink-", (3,)),
            ("trefoil", (1,)),
            ("figure8", (1,)),
            ("hopf+", (1, 2)),
            ("hopf-", (2, 1)),
            pytest.param("trefoil", (2,), marks=pytest.mark.slow),
            pytest.param("figure8", (2,), marks=pytest.mark.slow),
            ("hopf+", (1, 1)),
            pytest.param("hopf+", (2, 2), marks=pytest.mark.slow),
        ],
    )
    def test_euler_characteristic_is_colored_jones(self, name, colors):
        assert euler_matches_oracle(load_knot(name), colors)

    def test_euler_characteristic_over_f2(self):
        diagram = load_knot("unknot_kink+")
        complex_ = colored_complex(diagram, (3,), F2)
        assert complex_.euler_characteristic() == colored_jones(diagram, (3,))

    def test_json(self):
        data = colored_complex(load_knot("unknot"), (2,), F2).to_json()
        assert data["variant"] == "contract_full"
        assert data["colors"] == [2]
        assert data["pairing_degree_convention"] == "i_plus_k"
        expand = colored_complex(load_knot("unknot"), (2,), F2, Variant.EXPAND_FULL).to_json()
        assert expand["pairing_degree_convention"] == "i_minus_k"

    def test_input_errors(self):
        hopf = load_knot("hopf+")
        with pytest.raises(UnknownComponent):
            colored_complex(hopf, (1,))
        with pytest.raises(OutOfRange):
            colored_complex(hopf, (1, -1))
        with pytest.raises(UnknownComponent):
            colored_complex(hopf, (1, 1), distinguished=2)


class TestVariants:
    """Tests for the four assemblies and the checks built on them."""

    @pytest.mark.parametrize(
        "name, n, field",
        [
            ("unknot", 2, Q),
            ("unknot", 3, F2),
            ("unknot_kink+", 2, Q),
            ("unknot_kink+", 3, F2),
            ("unknot_kink-", 3, F2),
            pytest.param("trefoil", 2, Q, marks=pytest.mark.slow),
        ],
    )
    def test_variants_agree(self, name, n, field):
        report = compare_variants(load_knot(name), n, field)
        assert report["enforced"]
        assert report["equal"]
        assert report["d0_surjective"]
        assert report["composite_invertible"]
        assert len(report["tables"]) == 4

    def test_kernel_variant_homology(self):
        table = colored_homology(load_knot("unknot"), (2,), Q, Variant.CONTRACT_KERNEL)
        assert table.ranks == {(0, -2): 1, (0, 0): 1, (0, 2): 1}


class TestSmallColorChecks:
    def test_framed_unknot(self):
        assert framed_unknot(0) == load_knot("unknot")
        assert framed_unknot(2).writhe() == 2
        assert framed_unknot(-1).writhe() == -1

    @pytest.mark.parametrize("m", [-1, 1, 2])
    def test_framed_unknot_ranks(self, m):
        """rank H(K^2) = 2 + 2|m| and rank H_2 = 1 + 2|m|."""
        report = framed_unknot_ranks(m)
        assert report["holds"], report

    def test_long_exact_sequence(self):
        report = long_exact_sequence_check(load_knot("unknot_kink+"))
        assert report["q"]["surjective"]
        assert report["holds"], report

    def test_long_exact_sequence_needs_a_knot(self):
        with pytest.raises(OutOfRange):
            long_exact_sequence_check(load_knot("hopf+"))

class TestInvariance:
    """Colored Betti tables depend on the framed link, not on its diagram."""

    def test_r3_on_khovanov_homology(self):
        """At color one the check reduces to R3 invariance of Khovanov homology."""
        diagram = braid_closure([1, 2, 1, 1])
        assert same_colored_homology(diagram, R3(0, 1, 2).apply(diagram), (1,))

    def test_r2_on_a_curl_at_color_one(self):
        assert same_colored_homology(braid_closure([1]), braid_closure([1, 1, -1]), (1,))

    @pytest.mark.slow
    def test_orientation_reversal(self):
        trefoil = load_knot("trefoil")
        assert same_colored_homology(trefoil, reverse_component(trefoil, 0), (2,))

    @pytest.mark.slow
    def test_r2_on_the_framed_unknot(self):
        """A bigon added to the 1-framed unknot leaves H_2 unchanged."""
        assert same_colored_homology(braid_closure([1]), braid_closure([1, 1, -1]), (2,))

    @pytest.mark.slow
    def test_trefoil_as_a_braid_closure(self):
        assert same_colored_homology(load_knot("trefoil"), braid_closure([1, 1, 1]), (2,))

    @pytest.mark.slow
    def test_r3_on_a_closed_braid(self):
        diagram = braid_closure([1, 2, 1, 1])
        assert same_colored_homology(diagram, R3(0, 1, 2).apply(diagram), (2,))



if __name__ == "__main__":
    pytest.main([__file__, "-v"])
