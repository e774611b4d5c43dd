"""Polynomial arithmetic, calculus, orders, and their structural properties."""

import random
from fractions import Fraction

import pytest

from multres import (
    INFINITY,
    DimensionError,
    Polynomial,
    RingMismatchError,
    differentiate,
    div_exact,
    evaluate,
    order_along_coordinate_prime,
    order_at_point,
    parse,
    parse_ring,
    substitute,
    translate_to_origin,
    weighted_degree,
)
from multres.errors import ExactDivisionError

from conftest import random_poly


class TestRingOps:
    def test_product_difference_of_squares(self, rxy):
        f = parse("x + y", rxy) * parse("x - y", rxy)
        assert f == parse("x^2 - y^2", rxy)

    def test_additive_identity(self, rxy):
        f = parse("x^2*y - 3", rxy)
        assert f + Polynomial.zero(rxy) == f

    def test_cube_matches_repeated_multiplication(self):
        ring = parse_ring("Q[x]")
        f = parse("x + 1", ring)
        by_hand = f * f * f
        assert f**3 == by_hand
        assert str(f**3) == "x^3 + 3*x^2 + 3*x + 1"

    def test_ring_mismatch_rejected(self, rxy, rxz):
        with pytest.raises(RingMismatchError):
            parse("x", rxy) + parse("x", rxz)

    def test_associativity_distributivity_sampled(self, rxy):
        rng = random.Random(7)
        for _ in range(25):
            a, b, c = (random_poly(rng, rxy) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_char_p_arithmetic(self):
        ring = parse_ring("F5[x,y]")
        f = parse("3*x + 4*y", ring)
        assert f + f == parse("x + 3*y", ring)
        assert str(parse("7*x", ring)) == "2*x"


class TestDifferentiate:
    def test_single_partial(self, rxyz):
        f = parse("z^2 - x^2*y", rxyz)
        assert differentiate(f, "z") == parse("2*z", rxyz)

    def test_iterated_equals_composition(self, rxyz):
        f = parse("z^2 - x^2*y", rxyz)
        assert differentiate(f, "x", 2) == differentiate(differentiate(f, "x"), "x")
        assert differentiate(f, "x", 2) == parse("-2*y", rxyz)

    def test_constant_derivative_vanishes(self, rxy):
        assert differentiate(parse("5", rxy), "y").is_zero()


class TestSubstitute:
    def test_chart_style_substitution(self, rxyz):
        f = parse("z^2 - x^2*y", rxyz)
        image = substitute(
            f,
            {
                "z": parse("x*z", rxyz),
                "x": parse("x", rxyz),
                "y": parse("y", rxyz),
            },
            rxyz,
        )
        assert image == parse("x^2*z^2 - x^2*y", rxyz)

    def test_identity_map(self, rxy):
        f = parse("x^3 - 2*x*y + 1", rxy)
        identity = {v: Polynomial.variable(rxy, v) for v in rxy.variables}
        assert substitute(f, identity, rxy) == f

    def test_tschirnhaus_shift_expansion(self):
        ring = parse_ring("Q[a1,a2,Z]")
        f = parse("Z^2 + a1*Z + a2", ring)
        mapping = {
            "Z": parse("Z - 1/2*a1", ring),
            "a1": parse("a1", ring),
            "a2": parse("a2", ring),
        }
        assert substitute(f, mapping, ring) == parse("Z^2 + a2 - 1/4*a1^2", ring)

    def test_incomplete_map_rejected(self, rxy):
        from multres.errors import ContractError

        with pytest.raises(ContractError):
            substitute(parse("x + y", rxy), {"x": parse("x", rxy)}, rxy)

    def test_composition_of_substitutions(self, rxy):
        rng = random.Random(3)
        f = random_poly(rng, rxy)
        m1 = {"x": parse("x + y", rxy), "y": parse("y", rxy)}
        m2 = {"x": parse("x^2", rxy), "y": parse("x - y", rxy)}
        composed = {
            v: substitute(m1[v], m2, rxy) for v in rxy.variables
        }
        assert substitute(substitute(f, m1, rxy), m2, rxy) == substitute(f, composed, rxy)


class TestTranslate:
    def test_cusp_at_one_one(self, rxz):
        f = parse("z^2 - x^3", rxz)
        assert translate_to_origin(f, (1, 1)) == parse(
            "z^2 + 2*z - x^3 - 3*x^2 - 3*x", rxz
        )

    def test_origin_is_identity(self, rxy):
        f = parse("x^2*y - y + 7", rxy)
        assert translate_to_origin(f, (0, 0)) == f

    def test_constant_unchanged(self, rxy):
        c = parse("-3/2", rxy)
        assert translate_to_origin(c, (5, Fraction(1, 3))) == c

    def test_value_relation(self, rxy):
        rng = random.Random(11)
        f = random_poly(rng, rxy)
        point = (Fraction(1, 2), -2)
        g = translate_to_origin(f, point)
        assert evaluate(g, (0, 0)) == evaluate(f, point)
        probe = (3, Fraction(-1, 3))
        shifted = tuple(p + q for p, q in zip(probe, point))
        assert evaluate(g, probe) == evaluate(f, shifted)

    def test_dimension_mismatch(self, rxy):
        with pytest.raises(DimensionError):
            translate_to_origin(parse("x", rxy), (1, 2, 3))


class TestOrders:
    def test_whitney_order_at_origin(self, rxyz):
        assert order_at_point(parse("z^2 - x^2*y", rxyz), (0, 0, 0)) == 2

    def test_cusp_order_off_origin(self, rxz):
        assert order_at_point(parse("z^2 - x^3", rxz), (1, 1)) == 1

    def test_zero_polynomial_sentinel(self, rxy):
        assert order_at_point(Polynomial.zero(rxy), (0, 0)) is INFINITY
        assert INFINITY > 10**9
        assert INFINITY >= INFINITY

    def test_order_along_coordinate_prime(self, rxyz):
        f = parse("z^2 - x^2*y", rxyz)
        assert order_along_coordinate_prime(f, ("x", "z")) == 2
        assert order_along_coordinate_prime(f, ("z",)) == 0
        g = parse("x^3*y", rxyz)
        assert order_along_coordinate_prime(g, ("x", "y")) == 4

    def test_order_is_a_valuation(self, rxy):
        rng = random.Random(23)
        for _ in range(30):
            f = random_poly(rng, rxy)
            g = random_poly(rng, rxy)
            p = (rng.randint(-2, 2), rng.randint(-2, 2))
            assert order_at_point(f * g, p) == order_at_point(f, p) + order_at_point(g, p)

    def test_derivative_criterion_char_zero(self, rxy):
        import itertools

        rng = random.Random(29)
        for _ in range(10):
            f = random_poly(rng, rxy)
            for p in [(0, 0), (1, -1), (2, 0)]:
                n = 3
                ord_f = order_at_point(f, p)
                all_vanish = all(
                    evaluate(
                        _iterated(f, combo), p
                    )
                    == 0
                    for k in range(n)
                    for combo in itertools.combinations_with_replacement(
                        rxy.variables, k
                    )
                )
                assert (ord_f >= n) == all_vanish

    def test_affine_invariance_of_order(self, rxy):
        rng = random.Random(31)
        # v -> A v + b with A invertible over Q
        mapping = {
            "x": parse("x + 2*y + 1", rxy),
            "y": parse("x + 3*y - 2", rxy),
        }

        def image_of(point):
            return tuple(evaluate(mapping[v], point) for v in rxy.variables)

        for _ in range(15):
            f = random_poly(rng, rxy)
            p = (rng.randint(-2, 2), rng.randint(-2, 2))
            moved = substitute(f, mapping, rxy)
            assert order_at_point(moved, p) == order_at_point(f, image_of(p))


def _iterated(f, names):
    for v in names:
        f = differentiate(f, v)
    return f


class TestWeightedDegree:
    def test_discriminant_weights(self):
        ring = parse_ring("Q[a1,a2]")
        f = parse("a1^2 - 4*a2", ring)
        assert weighted_degree(f, {"a1": 1, "a2": 2}) == (2, 2, True)

    def test_inhomogeneous(self, rxy):
        assert weighted_degree(parse("x + y^2", rxy), {"x": 1, "y": 1}) == (1, 2, False)

    def test_zero_convention(self, rxy):
        lo, hi, homogeneous = weighted_degree(Polynomial.zero(rxy), {"x": 1, "y": 1})
        assert lo is INFINITY and hi is INFINITY and homogeneous


class TestDivExact:
    def test_monomial_division(self, rxz):
        f = parse("x^2*z^2 - x^3", rxz)
        assert div_exact(f, parse("x^2", rxz)) == parse("z^2 - x", rxz)

    def test_general_division_roundtrip(self, rxy):
        rng = random.Random(37)
        for _ in range(20):
            f = random_poly(rng, rxy)
            g = random_poly(rng, rxy)
            assert div_exact(f * g, g) == f

    def test_inexact_division_raises(self, rxy):
        with pytest.raises(ExactDivisionError):
            div_exact(parse("x + 1", rxy), parse("x", rxy))


class TestPrinting:
    def test_parse_print_roundtrip_random(self, rxyz):
        rng = random.Random(41)
        for _ in range(40):
            f = random_poly(rng, rxyz, max_degree=4, terms=5, allow_zero=True)
            assert parse(str(f), rxyz) == f

    def test_zero_prints_as_zero(self, rxy):
        assert str(Polynomial.zero(rxy)) == "0"

    def test_rational_coefficients_roundtrip(self, rxy):
        f = parse("1/2*x - 3/4*y^2 + 5", rxy)
        assert parse(str(f), rxy) == f

    def test_char_p_roundtrip(self):
        ring = parse_ring("F7[x,y]")
        f = parse("6*x^2 + 3*x*y + 5", ring)
        assert parse(str(f), ring) == f
