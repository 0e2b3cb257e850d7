"""Unit tests for reduced colored homology."""

import pytest

from src.algebra import BettiTable, FieldTag, euler_characteristic
from src.diagram import cable, load_knot
from src.errors import OutOfRange, UnknownComponent
from src.oracle import identify_e, reduced_colored_jones
from src.reduced import (
    boundary_matching,
    check_e_matching,
    cut_open,
    euler_matches_reduced_oracle,
    framing_shift,
    n1_sequence_check,
    reduced_complex,
    reduced_homology,
    tangle_resolution,
)

F2 = FieldTag.F2


class TestCutDiagram:
    def test_cut_open(self):
        hopf = load_knot("hopf+")
        cut = cut_open(hopf, 1)
        assert cut.component == 1
        assert cut.edge == min(hopf.components[1])
        assert cut.closed_components == 1

    def test_unknown_component(self):
        with pytest.raises(UnknownComponent):
            cut_open(load_knot("trefoil"), 1)


class TestBoundaryMatching:
    """Tests for the matching of cut ends in a resolution."""

    def test_parallel_strands_give_the_rainbow(self):
        cabled = cable(load_knot("unknot"), [3])
        assert boundary_matching(cabled, 0, 0) == identify_e(3)

    def test_surviving_resolutions_have_the_rainbow(self):
        """Resolutions of the 2-cable of a curl survive exactly when the cut strands close up."""
        complex_ = reduced_complex(load_knot("unknot_kink+"), (2,))
        check_e_matching(complex_)
        cabled = complex_.colored.cable
        for state in complex_.resolutions():
            assert boundary_matching(cabled, 0, state) == identify_e(2)

    def test_tangle_resolution(self):
        cabled = cable(load_knot("unknot"), [2])
        resolution = tangle_resolution(cabled, 0, 0)
        assert resolution.circles == ()
        assert resolution.matching == identify_e(2)

    def test_tangle_resolution_keeps_closed_circles(self):
        """A two-component link keeps the other component as a closed circle."""
        cabled = cable(load_knot("unlink2"), [1, 1])
        resolution = tangle_resolution(cabled, 0, 0)
        assert len(resolution.circles) == 1
        assert resolution.matching == identify_e(1)


class TestReducedHomology:
    """Tests for the reduced theory over F2."""

    @pytest.mark.parametrize("n", range(5))
    def test_unknot(self, n):
        """Every colored unknot has reduced homology F2 in degree (0, 0)."""
        assert reduced_homology(load_knot("unknot"), (n,)).ranks == {(0, 0): 1}

    def test_trefoil(self):
        table = reduced_homology(load_knot("trefoil"), (1,))
        assert table.ranks == {(0, 2): 1, (2, 6): 1, (3, 8): 1}

    @pytest.mark.parametrize(
        "name, colors, distinguished",
        [
            ("trefoil", (1,), 0),
            ("figure8", (1,), 0),
            ("unknot_kink+", (2,), 0),
            ("unknot_kink-", (3,), 0),
            pytest.param("trefoil", (2,), 0, marks=pytest.mark.slow),
            pytest.param("figure8", (2,), 0, marks=pytest.mark.slow),
            ("hopf+", (1, 2), 1),
        ],
    )
    def test_euler_characteristic(self, name, colors, distinguished):
        """The reduced complex categorifies the reduced colored Jones polynomial."""
        assert euler_matches_reduced_oracle(load_knot(name), colors, distinguished)

    def test_curl_shifts_the_grading(self):
        """One positive curl on the 2-colored unknot moves (0, 0) to (-2, -4)."""
        flat = reduced_homology(load_knot("unknot"), (2,))
        curled = reduced_homology(load_knot("unknot_kink+"), (2,))
        assert curled == framing_shift(flat, 2)
        assert curled.ranks == {(-2, -4): 1}

    def test_curl_shifts_the_grading_at_color_three(self):
        """At n = 3 one positive curl moves (0, 0) to (-4, -6)."""
        flat = reduced_homology(load_knot("unknot"), (3,))
        curled = reduced_homology(load_knot("unknot_kink+"), (3,))
        assert curled == framing_shift(flat, 3)
        assert curled.ranks == {(-4, -6): 1}

    def test_euler_of_curl(self):
        table = reduced_homology(load_knot("unknot_kink+"), (2,))
        assert euler_characteristic(table) == reduced_colored_jones(load_knot("unknot_kink+"), (2,))

    def test_json(self):
        data = reduced_complex(load_knot("trefoil"), (1,)).to_json()
        assert data["reduced"] is True
        assert data["distinguished"] == 0
        assert data["field"] == "f2"

    def test_only_over_f2(self):
        with pytest.raises(OutOfRange):
            reduced_complex(load_knot("trefoil"), (1,), 0, FieldTag.Q)


class TestFramingShift:
    def test_even_and_odd(self):
        table = BettiTable({(0, 0): 1}, F2)
        assert framing_shift(table, 1).ranks == {(0, 0): 1}
        assert framing_shift(table, 2).ranks == {(-2, -4): 1}
        assert framing_shift(table, 3).ranks == {(-4, -6): 1}
        assert framing_shift(table, 4).ranks == {(-8, -12): 1}
        assert framing_shift(table, 2, framing=-1).ranks == {(2, 4): 1}

    def test_negative_color(self):
        with pytest.raises(OutOfRange):
            framing_shift(BettiTable({}, F2), -1)


class TestUnreducedComparison:
    @pytest.mark.parametrize("name", ["unknot", "unknot_kink-", "trefoil", "figure8"])
    def test_sequence(self, name):
        assert n1_sequence_check(load_knot(name))

    def test_needs_a_knot(self):
        with pytest.raises(OutOfRange):
            n1_sequence_check(load_knot("unlink2"))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
