"""Unit tests for cobordism maps, Reidemeister equivalences and psi."""

import pytest

from src.algebra import FieldTag
from src.cobordism import (
    annulus_map,
    elementary_map,
    homology_map,
    movie_independence,
    movie_map,
    moved_marks,
    psi_saddle_merge,
    reidemeister_equivalence,
    tangle_matching,
    torus_composite,
)
from src.diagram import (
    R3,
    Birth,
    Death,
    Dot,
    LinkDiagram,
    Movie,
    R2Minus,
    Saddle,
    braid_closure,
    cable,
    contraction_movie,
    load_knot,
)
from src.errors import ColorMismatch, InvalidMove, OutOfRange
from src.khovanov import khovanov_cube, khovanov_homology

Q, F2 = FieldTag.Q, FieldTag.F2
EMPTY = LinkDiagram([], [], [])


def _torus_scalar(field):
    composite = torus_composite(cable(load_knot("unknot"), [2]), [[]], 0, 1, field)
    (key,) = composite.source.keys()
    return composite.image(key).get(key, 0)


def _first_r2(cable_diagram):
    movie = contraction_movie(cable_diagram, [[]], 0, 1)
    for index, move in enumerate(movie.moves):
        if isinstance(move, R2Minus):
            return movie, index
    raise AssertionError("contraction movie has no R2 move")


class TestElementaryMaps:
    """Tests for births, deaths, saddles and dots."""

    def test_birth(self):
        """A birth is the unit: injective on homology, degree (0, 1)."""
        f = elementary_map(Birth(1), khovanov_cube(EMPTY, Q))
        assert f.bidegree == (0, 1)
        assert homology_map(f).rank() == 1
        f.check()

    def test_death(self):
        """A death is the counit: rank one on A."""
        f = elementary_map(Death(1), khovanov_cube(load_knot("unknot"), Q))
        assert f.bidegree == (0, 1)
        assert homology_map(f).rank() == 1

    def test_merge(self):
        """Merging two circles is multiplication A x A -> A, which is onto."""
        for field in (Q, F2):
            f = elementary_map(Saddle(1, 2), khovanov_cube(load_knot("unlink2"), field))
            assert f.bidegree == (0, -1)
            assert homology_map(f).rank() == 2
            f.check()

    def test_split(self):
        """Splitting one circle is comultiplication, which is injective."""
        f = elementary_map(Saddle(1, 2), khovanov_cube(load_knot("unknot"), Q))
        assert f.target.diagram.n_components == 2
        assert homology_map(f).rank() == 2

    def test_dot(self):
        """A dot multiplies by X: rank one, degree (0, -2)."""
        f = elementary_map(Dot(1), khovanov_cube(load_knot("unknot"), F2))
        assert f.bidegree == (0, -2)
        assert homology_map(f).rank() == 1

    def test_move_that_does_not_apply(self):
        """A death on an edge that is not a loop is rejected."""
        with pytest.raises(InvalidMove):
            elementary_map(Death(1), khovanov_cube(load_knot("trefoil"), F2))

    def test_moved_marks(self):
        """Marks follow the edge map and may not vanish."""
        assert moved_marks([1, 4], {1: 3, 4: 4}) == (3, 4)
        with pytest.raises(InvalidMove):
            moved_marks([2], {1: 1})


class TestMovies:
    """Tests for composite maps along movies."""

    def test_birth_then_death(self):
        """A sphere evaluates to zero: eps(1) = 0."""
        f = movie_map(Movie(EMPTY, [Birth(1), Death(1)]), Q)
        assert f.bidegree == (0, 2)
        assert homology_map(f).is_zero()

    def test_bidegree_is_euler_characteristic(self):
        """Merge then cap is a disk: bidegree (0, 0)."""
        movie = Movie(load_knot("unlink2"), [Saddle(1, 2), Death(1)])
        f = movie_map(movie, F2)
        assert f.bidegree == (0, movie.euler()) == (0, 0)

    @pytest.mark.parametrize("expand", [False, True])
    def test_annulus_map_is_a_chain_map(self, expand):
        """The annulus on the 2-cable of a curl commutes with d both ways."""
        cabled = cable(load_knot("unknot_kink+"), [2])
        f = annulus_map(cabled, [[]], 0, 1, F2, expand=expand)
        assert f.bidegree == (0, 0)
        f.check()
        homology_map(f).check()

    def test_torus_over_q(self):
        """Contract after expand on the empty diagram is multiplication by +-2."""
        assert abs(_torus_scalar(Q)) == 2

    def test_torus_over_f2(self):
        """In characteristic 2 the torus vanishes."""
        assert _torus_scalar(F2) == 0

    def test_movie_independence_report(self):
        """Isotopic contraction movies from different basepoints induce maps of equal rank."""
        cabled = cable(load_knot("trefoil"), [2])
        report = movie_independence(cabled, [[]], 0, 1, F2, [1, 2])
        assert set(report["ranks"]) == {1, 2}
        assert report["agree"] is True
        assert len(set(report["ranks"].values())) == 1


class TestReidemeister:
    """Tests for the elimination-based R2 and R3 equivalences."""

    def test_r2_minus(self):
        """Removing a bigon is a homotopy equivalence."""
        movie, index = _first_r2(cable(load_knot("unknot_kink+"), [2]))
        before, after = movie.frames[index], movie.frames[index + 1]
        equivalence = reidemeister_equivalence(movie.moves[index], khovanov_cube(before, F2))
        equivalence.check()
        assert khovanov_homology(before, F2)[0] == khovanov_homology(after, F2)[0]

    def test_r2_plus(self):
        """Inserting the bigon back is an equivalence the other way."""
        movie, index = _first_r2(cable(load_knot("unknot_kink+"), [2]))
        move = movie.moves[index].reverse(movie.frames[index])
        after = movie.frames[index + 1]
        equivalence = reidemeister_equivalence(move, khovanov_cube(after, Q))
        equivalence.check()

    def test_r3(self):
        """Sliding a strand across a crossing leaves the homology alone."""
        diagram = braid_closure([1, 2, 1, 1])
        move = R3(0, 1, 2)
        equivalence = reidemeister_equivalence(move, khovanov_cube(diagram, F2))
        equivalence.check()
        assert khovanov_homology(diagram, F2)[0] == khovanov_homology(move.apply(diagram), F2)[0]

    def test_not_a_reidemeister_move(self):
        """Only R2 and R3 moves have equivalences."""
        with pytest.raises(InvalidMove):
            reidemeister_equivalence(Birth(1), khovanov_cube(EMPTY, F2))

    def test_tangle_matching_of_a_curl(self):
        """The two smoothings of a curl join its ends in two different ways."""
        curl = load_knot("unknot_kink+")
        zero = tangle_matching(curl, {0: 0}, [])
        one = tangle_matching(curl, {0: 1}, [])
        assert zero == frozenset(
            {frozenset({(1, True), (1, False)}), frozenset({(2, True), (2, False)})}
        )
        assert one == frozenset(
            {frozenset({(1, True), (2, True)}), frozenset({(1, False), (2, False)})}
        )


class TestPsi:
    """Tests for the map induced by a merging saddle."""

    def test_merge_of_two_colored_unknots(self):
        """psi commutes with the colored differentials over F2."""
        psi = psi_saddle_merge(load_knot("unlink2"), Saddle(1, 2), (2, 2))
        psi.check()
        assert psi.chain_map.bidegree == (0, -2)

    def test_shared_dots_give_zero_blocks(self):
        """Only the pairing with both pairs on the same dots is killed."""
        psi = psi_saddle_merge(load_knot("unlink2"), Saddle(1, 2), (2, 2))
        assert len(psi.landing) == 4
        assert sum(1 for s0 in psi.landing.values() if s0 is None) == 1

    def test_only_over_f2(self):
        """The merge map is built in characteristic 2."""
        with pytest.raises(OutOfRange):
            psi_saddle_merge(load_knot("unlink2"), Saddle(1, 2), (2, 2), Q)

    def test_colors_must_agree(self):
        """Merging components of different colors is rejected."""
        with pytest.raises(ColorMismatch):
            psi_saddle_merge(load_knot("unlink2"), Saddle(1, 2), (1, 2))

    def test_positive_colors(self):
        """Deleted components have no base edges to merge along."""
        with pytest.raises(OutOfRange):
            psi_saddle_merge(load_knot("unlink2"), Saddle(1, 2), (0, 0))

    def test_saddle_must_join_components(self):
        """Both edges on one component is not a merge."""
        with pytest.raises(InvalidMove):
            psi_saddle_merge(load_knot("unknot_kink+"), Saddle(1, 2), (2,))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
