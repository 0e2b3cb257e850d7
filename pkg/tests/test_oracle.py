"""Unit tests for the skein-theoretic oracles."""

from math import comb

import pytest

from src.algebra import LaurentPoly, RationalFn, quantum_integer
from src.diagram import LinkDiagram, cable, load_knot, reverse_component
from src.errors import OutOfRange
from src.oracle import (
    TLDiagram,
    TLElement,
    bracket_by_states,
    catalan,
    colored_jones,
    colored_jones_sum,
    crossingless_matchings,
    framing_factor,
    framing_shift_check,
    identify_e,
    jones,
    jones_wenzl,
    kauffman_bracket,
    orientation_reversal_factor,
    projector_coupling,
    rainbow,
    reduced_colored_jones,
    skein_relation_holds,
)

q = LaurentPoly.q
UNKNOT_VALUE = q(1) + q(-1)


class TestBracket:
    """Tests for the bracket and the Jones polynomial."""

    def test_small_brackets(self):
        assert kauffman_bracket(LinkDiagram([], [], [])) == 1
        assert kauffman_bracket(load_knot("unknot")) == UNKNOT_VALUE
        assert kauffman_bracket(load_knot("hopf+")) == q(4) + q(2) + 1 + q(-2)

    @pytest.mark.parametrize("name", ["unknot_kink+", "unknot_kink-", "trefoil", "figure8", "hopf+"])
    def test_frontier_sum_matches_state_sum(self, name):
        diagram = load_knot(name)
        assert kauffman_bracket(diagram) == bracket_by_states(diagram)

    def test_cable_bracket_matches_state_sum(self):
        diagram = cable(load_knot("trefoil"), [2]).diagram
        assert kauffman_bracket(diagram) == bracket_by_states(diagram)

    def test_jones_values(self):
        assert jones(load_knot("unknot")) == UNKNOT_VALUE
        assert jones(load_knot("unknot_kink+")) == UNKNOT_VALUE
        assert jones(load_knot("unknot_kink-")) == UNKNOT_VALUE
        assert jones(load_knot("unlink2")) == UNKNOT_VALUE ** 2
        assert jones(load_knot("trefoil")) == q(1) + q(3) + q(5) - q(9)
        assert jones(load_knot("hopf+")) == 1 + q(2) + q(4) + q(6)

    def test_figure_eight_is_amphichiral(self):
        value = jones(load_knot("figure8"))
        assert value.bar() == value

    @pytest.mark.parametrize(
        "name,crossing",
        [("trefoil", 0), ("hopf+", 0), ("hopf-", 1), ("unknot_kink+", 0)]
        + [("figure8", x) for x in range(4)],
    )
    def test_skein_relation(self, name, crossing):
        assert skein_relation_holds(load_knot(name), crossing)

    def test_orientation_reversal(self):
        """Reversing one Hopf component multiplies J by q^-6."""
        hopf = load_knot("hopf+")
        reversed_hopf = reverse_component(hopf, 0)
        assert jones(reversed_hopf) == q(-6) * jones(hopf)
        assert jones(reversed_hopf) == jones(load_knot("hopf-"))


class TestColoredJones:
    """Tests for the cabling formula and its normalisations."""

    @pytest.mark.parametrize("n", range(6))
    def test_unknot(self, n):
        assert colored_jones(load_knot("unknot"), [n]) == quantum_integer(n + 1)

    def test_cabling_identity_shadow(self):
        """sum_k (-1)^k binom(n-k, k) [2]^{n-2k} = [n+1]."""
        for n in range(11):
            total = sum(
                ((-1) ** k * comb(n - k, k) * UNKNOT_VALUE ** (n - 2 * k) for k in range(n // 2 + 1)),
                LaurentPoly(),
            )
            assert total == quantum_integer(n + 1)

    def test_color_one_is_jones(self):
        for name in ("trefoil", "figure8", "hopf+"):
            diagram = load_knot(name)
            assert colored_jones(diagram) == jones(diagram)

    def test_color_zero_deletes_component(self):
        assert colored_jones(load_knot("hopf+"), [0, 2]) == quantum_integer(3)
        assert colored_jones(load_knot("trefoil"), [0]) == 1

    def test_low_color_identities(self):
        for name in ("trefoil", "figure8"):
            knot = load_knot(name)
            two = jones(cable(knot, [2]).diagram)
            three = jones(cable(knot, [3]).diagram)
            assert colored_jones(knot, [2]) == two - 1
            assert colored_jones(knot, [3]) == three - 2 * jones(knot)

    def test_direct_sum(self):
        """V_1 (x) V_1 = V_2 + V_0 on the 2-cable."""
        trefoil = load_knot("trefoil")
        assert jones(cable(trefoil, [2]).diagram) == colored_jones_sum(trefoil, None, 0, [2, 0])

    def test_framing_factors(self):
        assert framing_factor(1) == 1
        assert framing_factor(2) == q(-4)
        assert framing_factor(3) == q(-6)
        assert framing_factor(2, -1) == q(4)
        with pytest.raises(OutOfRange):
            framing_factor(-1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_framing_shift_unknot(self, n):
        assert framing_shift_check(load_knot("unknot"), n)

    def test_framing_shift_trefoil(self):
        assert framing_shift_check(load_knot("trefoil"), 2)
        assert framing_shift_check(load_knot("trefoil"), 2, sign=-1)

    def test_reduced(self):
        assert reduced_colored_jones(load_knot("unknot"), [3]) == 1
        assert reduced_colored_jones(load_knot("trefoil"), [0]) == 1
        assert isinstance(reduced_colored_jones(load_knot("trefoil"), [2]), LaurentPoly)

    def test_negative_color(self):
        with pytest.raises(OutOfRange):
            colored_jones(load_knot("unknot"), [-1])

    def test_colored_orientation_rule(self):
        hopf = load_knot("hopf+")
        for colors in ([1, 1], [1, 2], [2, 1]):
            for component in (0, 1):
                reversed_hopf = reverse_component(hopf, component)
                factor = orientation_reversal_factor(hopf, component, colors)
                assert colored_jones(reversed_hopf, colors) == factor * colored_jones(hopf, colors)
        assert orientation_reversal_factor(hopf, 0, [1, 1]) == q(-6)
        assert orientation_reversal_factor(hopf, 0, [1, 2]) == 1


class TestTemperleyLieb:
    """Tests for TL diagrams, matchings and Jones-Wenzl projectors."""

    def test_catalan(self):
        assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
        for n in range(7):
            assert len(crossingless_matchings(n)) == catalan(n)

    def test_crossing_diagram_rejected(self):
        with pytest.raises(OutOfRange):
            TLDiagram.build(2, [(0, 3), (1, 2)])

    def test_small_projectors(self):
        assert jones_wenzl(1) == TLElement.identity(1)
        expected = TLElement.identity(2) - TLElement.generator(2, 1).scale(
            RationalFn(1, quantum_integer(2))
        )
        assert jones_wenzl(2) == expected
        assert len(jones_wenzl(3)) == 5

    @pytest.mark.parametrize("n", range(1, 6))
    def test_projector_relations(self, n):
        projector = jones_wenzl(n)
        assert projector * projector == projector
        for i in range(1, n):
            generator = TLElement.generator(n, i)
            assert (generator * projector).is_zero()
            assert (projector * generator).is_zero()

    def test_couplings(self):
        assert projector_coupling(1, ((1, 2),)) == quantum_integer(2)
        assert projector_coupling(2, rainbow(2)) == quantum_integer(3)
        assert projector_coupling(2, ((1, 2), (3, 4))).is_zero()

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_identify_e(self, n):
        assert identify_e(n) == rainbow(n)
        assert projector_coupling(n, rainbow(n)).as_laurent() == quantum_integer(n + 1)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
