"""Unit tests for PD parsing, cabling and diagram moves."""

import pytest

from src.diagram import (
    Birth,
    Death,
    Dot,
    LinkDiagram,
    Movie,
    R2Minus,
    R2Plus,
    R3,
    Saddle,
    add_kink,
    braid_closure,
    cable,
    contraction_movie,
    diagram_from_dict,
    diagram_isomorphism,
    load_knot,
    parse_pd,
    reverse_component,
    sub_cable,
    validate_pairing,
)
from src.errors import (
    ColorMismatch,
    InvalidMove,
    InvalidSite,
    MalformedPD,
    NonAdjacentPair,
    NonPlanar,
    OrientationInconsistent,
    PairingMismatch,
    UnknownComponent,
)
from src.oracle import jones

EMPTY = LinkDiagram([], [], [])


class TestLinkDiagram:
    """Tests for parsing and basic invariants of diagrams."""

    def test_unknot(self):
        unknot = load_knot("unknot")
        assert unknot.n_crossings == 0
        assert unknot.n_components == 1
        assert unknot.loops == (1,)

    def test_trefoil(self):
        trefoil = load_knot("trefoil")
        assert trefoil.n_components == 1
        assert trefoil.writhe() == 3
        assert trefoil.n_plus == 3 and trefoil.n_minus == 0

    def test_figure_eight_writhe(self):
        assert load_knot("figure8").writhe() == 0

    def test_hopf_linking_numbers(self):
        assert load_knot("hopf+").linking_number(0, 1) == 1
        assert load_knot("hopf-").linking_number(0, 1) == -1
        with pytest.raises(UnknownComponent):
            load_knot("hopf+").linking_number(0, 2)

    def test_parse_json(self):
        diagram = parse_pd('{"crossings": [[1, 1, 2, 2]], "signs": [1], "colors": {"0": 3}}')
        assert diagram.writhe() == 1
        assert diagram.colors == (3,)

    def test_loop_count(self):
        diagram = diagram_from_dict({"crossings": [], "signs": [], "loops": 2})
        assert diagram.loops == (1, 2)
        assert diagram.n_components == 2

    def test_malformed(self):
        with pytest.raises(MalformedPD):
            parse_pd("not json")
        with pytest.raises(MalformedPD):
            diagram_from_dict({"crossings": [[1, 2, 3]], "signs": [1]})
        with pytest.raises(MalformedPD):
            diagram_from_dict({"crossings": [[1, 1, 2, 2]], "signs": [2]})
        with pytest.raises(MalformedPD):
            load_knot("no_such_knot")

    def test_orientation_inconsistent(self):
        with pytest.raises(OrientationInconsistent):
            LinkDiagram([[1, 1, 2, 2]], [-1])

    def test_non_planar(self):
        with pytest.raises(NonPlanar):
            LinkDiagram([[1, 2, 1, 2]], [1])

    def test_add_kink(self):
        kinked = add_kink(load_knot("unknot"), 1, 1)
        assert kinked.writhe() == 1
        assert diagram_isomorphism(kinked, load_knot("unknot_kink+")) is not None
        with pytest.raises(InvalidSite):
            add_kink(load_knot("unknot"), 7, 1)

    def test_reverse_component(self):
        assert reverse_component(load_knot("trefoil"), 0).writhe() == 3
        assert reverse_component(load_knot("hopf+"), 0).linking_number(0, 1) == -1


class TestCable:
    """Tests for blackboard cables and sub-cables."""

    def test_kink_two_cable(self):
        cabled = cable(load_knot("unknot_kink+"), [2])
        assert cabled.diagram.n_crossings == 4
        assert cabled.diagram.n_components == 2
        assert cabled.diagram.writhe() == 0
        assert cabled.diagram.linking_number(0, 1) == -1

    def test_trefoil_two_cable(self):
        cabled = cable(load_knot("trefoil"), [2])
        assert cabled.diagram.n_crossings == 12
        assert cabled.diagram.linking_number(0, 1) == -3

    def test_basepoints_are_lowest_strand_edges(self):
        cabled = cable(load_knot("figure8"), [3])
        for strand, edge in cabled.basepoints.items():
            assert edge == min(cabled.strand_edges(strand))

    def test_color_zero_deletes_component(self):
        cabled = cable(load_knot("hopf+"), [0, 2])
        assert cabled.diagram.n_crossings == 0
        assert cabled.diagram.n_components == 2
        assert set(cabled.basepoints) == {(1, 1), (1, 2)}

    def test_sub_cable(self):
        cabled = cable(load_knot("trefoil"), [2])
        assert sub_cable(cabled, [[]]) == cabled.diagram
        assert sub_cable(cabled, [[(1, 2)]]) == EMPTY

    def test_pairing_validation(self):
        with pytest.raises(PairingMismatch):
            validate_pairing([2], [[(1, 2)], []])
        with pytest.raises(PairingMismatch):
            validate_pairing([3], [[(1, 2), (2, 3)]])
        with pytest.raises(PairingMismatch):
            validate_pairing([2], [[(2, 3)]])
        validate_pairing([4], [[(1, 2), (3, 4)]])


class TestMoves:
    """Tests for single moves and movies."""

    def test_death_and_birth(self):
        unknot = load_knot("unknot")
        assert Death(1).apply(unknot) == EMPTY
        assert Birth(1).apply(EMPTY) == unknot
        with pytest.raises(InvalidSite):
            Death(1).apply(load_knot("trefoil"))
        with pytest.raises(InvalidSite):
            Birth(1).apply(unknot)

    def test_saddle_on_loops(self):
        unlink = load_knot("unlink2")
        assert Saddle(1, 2).apply(unlink) == load_knot("unknot")
        split = Saddle(1, 2).apply(load_knot("unknot"))
        assert split.loops == (1, 2)

    def test_saddle_color_mismatch(self):
        with pytest.raises(ColorMismatch):
            Saddle(1, 2).apply(load_knot("unlink2").with_colors([1, 2]))

    def test_dot_keeps_diagram(self):
        trefoil = load_knot("trefoil")
        assert Dot(1).apply(trefoil) == trefoil
        with pytest.raises(InvalidSite):
            Dot(99).apply(trefoil)

    def test_kink_contraction_movie(self):
        cabled = cable(load_knot("unknot_kink+"), [2])
        movie = contraction_movie(cabled, [[]], 0, 1)
        assert movie.moves == [Saddle(1, 2), R2Minus(2, 3), R2Minus(0, 1), Death(1)]
        assert movie.end == EMPTY
        assert movie.euler() == 0

    def test_loop_contraction_movie(self):
        cabled = cable(load_knot("unknot"), [2])
        movie = contraction_movie(cabled, [[]], 0, 1)
        assert [type(m) for m in movie.moves] == [Saddle, Death]
        assert movie.end == EMPTY

    def test_trefoil_contraction_movie(self):
        cabled = cable(load_knot("trefoil"), [2])
        movie = contraction_movie(cabled, [[]], 0, 1)
        kinds = [type(m) for m in movie.moves]
        assert kinds[0] is Saddle and kinds[-1] is Death
        assert kinds.count(R2Minus) == 6
        assert movie.end == EMPTY

    def test_partial_contraction(self):
        cabled = cable(load_knot("unknot_kink+"), [3])
        movie = contraction_movie(cabled, [[]], 0, 1)
        assert movie.end == sub_cable(cabled, [[(1, 2)]])
        assert movie.end.n_crossings == 1

    def test_contraction_errors(self):
        cabled = cable(load_knot("unknot_kink+"), [2])
        with pytest.raises(NonAdjacentPair):
            contraction_movie(cabled, [[]], 0, 2)
        with pytest.raises(PairingMismatch):
            contraction_movie(cable(load_knot("unknot"), [3]), [[(1, 2)]], 0, 2)

    def test_r2_plus_undoes_r2_minus(self):
        cabled = cable(load_knot("unknot_kink+"), [2])
        frames = contraction_movie(cabled, [[]], 0, 1).frames
        smaller = R2Minus(2, 3).apply(frames[1])
        assert smaller == frames[2]
        assert R2Plus(frames[1], (2, 3)).apply(smaller) == frames[1]
        with pytest.raises(InvalidMove):
            R2Plus(frames[1], (2, 3)).apply(frames[1])

    def test_r2_needs_bigon(self):
        with pytest.raises(InvalidSite):
            R2Minus(0, 1).apply(load_knot("hopf+"))

    def test_reversed_movie(self):
        cabled = cable(load_knot("unknot_kink+"), [2])
        movie = contraction_movie(cabled, [[]], 0, 1)
        backwards = movie.reversed()
        assert isinstance(backwards, Movie)
        assert backwards.start == EMPTY
        assert backwards.end == movie.start
        assert isinstance(backwards.moves[0], Birth)
        assert backwards.euler() == movie.euler()


class TestBraidClosure:
    def test_trefoil(self):
        trefoil = braid_closure([1, 1, 1])
        assert trefoil.n_crossings == 3
        assert trefoil.n_components == 1
        assert trefoil.writhe() == 3
        assert jones(trefoil) == jones(load_knot("trefoil"))

    def test_hopf(self):
        hopf = braid_closure([1, 1])
        assert hopf.n_components == 2
        assert hopf.linking_number(0, 1) == 1
        assert jones(hopf) == jones(load_knot("hopf+"))

    def test_unused_strand_closes_to_a_loop(self):
        diagram = braid_closure([1], strands=3)
        assert diagram.n_components == 2
        assert len(diagram.loops) == 1

    def test_r3_triangle(self):
        diagram = braid_closure([1, 2, 1, 1])
        assert diagram.n_crossings == 4
        assert R3(0, 1, 2).apply(diagram).n_crossings == 4

    def test_bad_words(self):
        with pytest.raises(MalformedPD):
            braid_closure([1, 0])
        with pytest.raises(MalformedPD):
            braid_closure([3], strands=3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
