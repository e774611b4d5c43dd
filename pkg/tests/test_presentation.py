"""Presentations: attached algebras, transversality, transforms, Zariski."""

import pytest

from multres import (
    Center,
    ContractError,
    MonicPoly,
    attach_algebra,
    contains_point,
    make_charts,
    parse,
    parse_ring,
    transversality_test,
    zariski_check,
)
from multres.errors import PermissibilityError
from multres.presentation import (
    Presentation,
    generic_membership,
    lifted_point,
    max_mult_upper_bound_check,
    multiplicity_profile,
)
from multres.presentation import transform as presentation_transform
from multres.rees import BoxGrid, sing_generators


def monic(ring_spec, var, text):
    base = parse_ring(ring_spec)
    return MonicPoly.from_polynomial(parse(text, base.extend((var,))), var)


@pytest.fixture
def whitney():
    f = monic("Q[x,y]", "X1", "X1^2 - x^2*y")
    return Presentation(f.base, (f,))


@pytest.fixture
def cusp_pair():
    return Presentation(
        parse_ring("Q[x,y]"),
        (
            monic("Q[x,y]", "X1", "X1^2 - x^3"),
            monic("Q[x,y]", "X2", "X2^2 - y^3"),
        ),
    )


class TestAttach:
    def test_whitney_ambient_and_generators(self, whitney):
        attached = attach_algebra(whitney)
        assert attached.ambient.variables == ("x", "y", "X1")
        f, weight = attached.algebra.generators[0]
        assert weight == 2
        assert f == parse("X1^2 - x^2*y", attached.ambient)
        sing = sing_generators(attached.algebra)
        for x in range(-2, 3):
            for y in range(-2, 3):
                for t in range(-2, 3):
                    assert sing.vanishes_at((x, y, t)) == (x == 0 and t == 0)

    def test_cusp_pair_single_point(self, cusp_pair):
        attached = attach_algebra(cusp_pair)
        assert attached.ambient.variables == ("x", "y", "X1", "X2")
        sing = sing_generators(attached.algebra)
        for x in range(-1, 2):
            for y in range(-1, 2):
                for s in range(-1, 2):
                    for t in range(-1, 2):
                        assert sing.vanishes_at((x, y, s, t)) == (
                            x == y == s == t == 0
                        )

    def test_empty_presentation_rejected(self):
        with pytest.raises(ContractError):
            Presentation(parse_ring("Q[x]"), ())

    def test_generic_rank_is_degree_product(self, cusp_pair):
        assert cusp_pair.generic_rank == 4


class TestTransversality:
    def test_whitney_catalog_points(self, whitney):
        assert transversality_test(whitney, (0, 0)).ok
        assert transversality_test(whitney, (0, 1)).ok
        assert not transversality_test(whitney, (1, 1)).ok

    def test_witnesses_are_fiber_coordinates(self, whitney):
        result = transversality_test(whitney, (0, 1))
        assert result.witnesses == (0,)

    def test_agrees_with_attached_sing_on_grid(self, whitney, cusp_pair):
        for P in (whitney, cusp_pair):
            algebra = attach_algebra(P).algebra
            for pt in BoxGrid(-2, 2).points(P.base):
                assert transversality_test(P, pt).ok == contains_point(
                    algebra, lifted_point(P, pt)
                )

    def test_noncentered_entry_gets_nonzero_witness(self):
        # (X1 - x)^2 = X1^2 - 2x X1 + x^2 is 2-fold over every point, and the
        # fiber coordinate of the double point over x = 3 is 3.
        f = monic("Q[x]", "X1", "X1^2 - 2*x*X1 + x^2")
        P = Presentation(f.base, (f,))
        result = transversality_test(P, (3,))
        assert result.ok
        assert result.witnesses == (3,)
        # The lifted point sits in Sing of the attached algebra.
        algebra = attach_algebra(P).algebra
        assert lifted_point(P, (3,)) == (3, 3)
        assert contains_point(algebra, lifted_point(P, (3,)))
        # And the grid agreement holds for this non-centered presentation too.
        for c in range(-2, 3):
            assert transversality_test(P, (c,)).ok == contains_point(
                algebra, lifted_point(P, (c,))
            )


class TestTransform:
    def test_whitney_line_center(self, whitney):
        center = Center(("x",))
        chart = make_charts(whitney.base, center)[0]
        moved = presentation_transform(whitney, center, chart)
        assert moved.entries[0].to_polynomial() == parse(
            "X1^2 - y", parse_ring("Q[x,y,X1]")
        )
        # No 2-fold rational point remains on the grid.
        assert not any(
            transversality_test(moved, pt).ok for pt in BoxGrid(-2, 2).points(moved.base)
        )

    def test_cusp_multiplicity_sequence(self):
        f = monic("Q[x]", "X1", "X1^2 - x^3")
        P = Presentation(f.base, (f,))
        center = Center(("x",))
        chart = make_charts(P.base, center)[0]
        moved = presentation_transform(P, center, chart)
        assert moved.entries[0].to_polynomial() == parse("X1^2 - x", parse_ring("Q[x,X1]"))
        assert transversality_test(P, (0,)).ok
        assert not any(
            transversality_test(moved, (c,)).ok for c in range(-2, 3)
        )

    def test_cubic_entry(self):
        f = monic("Q[x,y]", "X1", "X1^3 + x^2*y*X1 + x^3*y")
        P = Presentation(f.base, (f,))
        center = Center(("x", "y"))
        chart = [c for c in make_charts(P.base, center) if c.pivot == "x"][0]
        moved = presentation_transform(P, center, chart)
        assert moved.entries[0].to_polynomial() == parse(
            "X1^3 + x*y*X1 + x*y", parse_ring("Q[x,y,X1]")
        )

    def test_non_permissible_center_rejected(self, whitney):
        center = Center(("y",))
        chart = make_charts(whitney.base, center)[0]
        with pytest.raises(PermissibilityError):
            presentation_transform(whitney, center, chart)

    def test_entry_needing_centering(self):
        # (X1 - x)^2 - x^3: the raw coefficients fail the order condition
        # along (x), the centered ones satisfy it.
        f = monic("Q[x]", "X1", "X1^2 - 2*x*X1 + x^2 - x^3")
        P = Presentation(f.base, (f,))
        assert transversality_test(P, (0,)).ok
        center = Center(("x",))
        chart = make_charts(P.base, center)[0]
        moved = presentation_transform(P, center, chart)
        assert moved.entries[0].to_polynomial() == parse(
            "X1^2 - x", parse_ring("Q[x,X1]")
        )
        assert not any(transversality_test(moved, (c,)).ok for c in range(-2, 3))


class TestZariski:
    def test_double_root(self):
        f = monic("Q[x]", "Z", "Z^2 - x*Z")
        rep = zariski_check(f, (0,))
        assert (rep.lhs, rep.rhs, rep.verdict) == (2, 2, "equal")
        assert rep.roots == ((0, 2),)

    def test_two_simple_roots(self):
        f = monic("Q[x]", "Z", "Z^2 - 3*Z + 2")
        rep = zariski_check(f, (0,))
        assert rep.rhs == 2 and rep.verdict == "equal"
        assert sorted(rep.roots) == [(1, 1), (2, 1)]

    def test_inconclusive_when_not_split(self):
        f = monic("Q[x]", "Z", "Z^2 - 2")
        rep = zariski_check(f, (0,))
        assert rep.verdict == "inconclusive"
        assert rep.rhs < rep.lhs

    def test_dimension_mismatch_rejected(self):
        f = monic("Q[x]", "Z", "Z^2 - x")
        from multres.errors import DimensionError

        with pytest.raises(DimensionError):
            zariski_check(f, (0, 0))


class TestStratification:
    def test_generic_membership_whitney_line(self, whitney):
        assert generic_membership(whitney, ("x",), (0,))
        assert not generic_membership(whitney, ("y",), (0,))

    def test_profile_counts(self, cusp_pair):
        assert multiplicity_profile(cusp_pair, (0, 0)) == (True, True)
        assert multiplicity_profile(cusp_pair, (0, 1)) == (True, False)
        assert multiplicity_profile(cusp_pair, (1, 1)) == (False, False)

    def test_upper_bound_check_catalog(self, whitney, cusp_pair):
        assert max_mult_upper_bound_check(whitney)
        assert max_mult_upper_bound_check(cusp_pair)

    def test_smooth_control_has_empty_locus(self):
        f = monic("Q[x]", "X1", "X1^2 - x")
        P = Presentation(f.base, (f,))
        assert not any(transversality_test(P, (c,)).ok for c in range(-2, 3))
        assert max_mult_upper_bound_check(P)

    def test_degenerate_everywhere_nfold(self):
        f = monic("Q[x]", "X1", "X1^2")
        P = Presentation(f.base, (f,))
        assert all(transversality_test(P, (c,)).ok for c in range(-2, 3))
        assert max_mult_upper_bound_check(P)
