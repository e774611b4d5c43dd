"""Exact plane-curve solving: singular points, squarefreeness, components."""

from fractions import Fraction

import pytest

from multres import parse, parse_ring
from multres.curves import (
    is_squarefree,
    singular_points,
    solve_plane_system,
    split_components,
)
from multres.errors import ContractError
from multres.poly import differentiate


@pytest.fixture
def ring():
    return parse_ring("Q[x,y]")


class TestSingularPoints:
    def test_cusp(self, ring):
        result = singular_points(parse("y^2 - x^3", ring))
        assert result.points == ((0, 0),)
        assert result.certified and not result.irrational

    def test_node_with_shifted_branch(self, ring):
        result = singular_points(parse("y^2 - x^2*(x + 1)", ring))
        assert result.points == ((0, 0),)
        assert result.certified

    def test_smooth_parabola(self, ring):
        result = singular_points(parse("y - x^2", ring))
        assert result.points == ()
        assert result.certified

    def test_two_singular_points(self, ring):
        # Union of two cusps at different x: singular at (0,0) and (2,0).
        f = parse("(y^2 - x^3)", ring)
        g = parse("y^2 - (x - 2)^3", ring)
        result = singular_points(f * g)
        assert (0, 0) in result.points
        assert (2, 0) in result.points

    def test_line_crossings_counted(self, ring):
        # x(y - 1): a vertical and a horizontal line crossing at (0, 1).
        f = parse("x*(y - 1)", ring)
        result = singular_points(f)
        assert result.points == ((0, 1),)
        assert result.certified

    def test_horizontal_line_pair_smooth(self, ring):
        result = singular_points(parse("y^2 - 1", ring))
        assert result.points == ()
        assert result.certified

    def test_line_meets_cusp(self, ring):
        # x * (y^2 - x^3): the line {x=0} is tangent... it meets the cusp at (0,0).
        f = parse("x*(y^2 - x^3)", ring)
        result = singular_points(f)
        assert (0, 0) in result.points

    def test_irrational_singularity_detected(self, ring):
        # (y - x^2)(y + x^2 - 2): conic pair crossing at x^2 = 1 -> rational,
        # while (y - x^2)(y + x^2 - 3) crosses at x^2 = 3/2 -> irrational.
        f = parse("(y - x^2)*(y + x^2 - 3)", ring)
        result = singular_points(f)
        assert result.points == ()
        assert result.irrational or not result.certified

    def test_rational_conic_crossings(self, ring):
        f = parse("(y - x^2)*(y + x^2 - 2)", ring)
        result = singular_points(f)
        assert result.points == ((-1, 1), (1, 1))
        assert result.certified


class TestSquarefree:
    def test_catalog_curves_are_squarefree(self, ring):
        for text in ("y^2 - x^3", "y^2 - x^4", "y^3 - x^4", "y - x^2", "x*(y - 1)"):
            assert is_squarefree(parse(text, ring))

    def test_squares_detected(self, ring):
        assert not is_squarefree(parse("(y - x)^2", ring))
        assert not is_squarefree(parse("x^2*y - x^2", ring))  # x^2 (y - 1)
        assert not is_squarefree(parse("(y^2 - x^3)^2", ring))

    def test_univariate_cases(self, ring):
        assert is_squarefree(parse("x^2 - 1", ring))
        assert not is_squarefree(parse("x^2", ring))


class TestSplitComponents:
    def test_extracts_both_contents(self, ring):
        f = parse("x*(y - 1)*(y^2 - x^3)", ring)
        cx, cy, prim = split_components(f, "x", "y")
        assert cx == parse("x", ring)
        assert cy * Fraction(1) == parse("y - 1", ring)
        assert prim == parse("y^2 - x^3", ring)

    def test_primitive_part_trivial_content(self, ring):
        f = parse("y^2 - x^3", ring)
        cx, cy, prim = split_components(f, "x", "y")
        assert cx.is_constant() and cy.is_constant()
        assert prim == f


class TestSolveSystem:
    def test_solves_partial_system(self, ring):
        f = parse("y^2 - x^3", ring)
        result = solve_plane_system([f, differentiate(f, "x"), differentiate(f, "y")])
        assert result.points == ((0, 0),)
        assert result.certified

    def test_unit_member_certifies_empty(self, ring):
        result = solve_plane_system([parse("y - x", ring), parse("3", ring)])
        assert result.points == () and result.certified

    def test_linear_intersection(self, ring):
        result = solve_plane_system([parse("y - 1", ring), parse("x + y", ring)])
        assert result.points == ((-1, 1),)
        assert result.certified

    def test_zero_system_rejected(self, ring):
        with pytest.raises(ContractError):
            solve_plane_system([parse("0", ring)])

    def test_shared_factor_pair_with_extra_constraint(self, ring):
        # f and g share the line y = x, but h pins the system to x = 0.
        f = parse("(y - x)*(y + x)", ring)
        g = parse("(y - x)*(y - 2)", ring)
        h = parse("x", ring)
        result = solve_plane_system([f, g, h])
        assert result.points == ((0, 0),)
        assert result.certified

    def test_common_component_everywhere_rejected(self, ring):
        f = parse("(y - x)*(y + x)", ring)
        g = parse("(y - x)*(y - 2)", ring)
        with pytest.raises(ContractError):
            solve_plane_system([f, g])
