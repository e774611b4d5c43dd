"""Chart atlases, total and strict transforms, and the transform identity."""

import random

import pytest

from multres import (
    Center,
    ContractError,
    Polynomial,
    make_charts,
    parse,
    parse_ring,
    strict_transform_monic,
    substitute,
    total_transform,
)
from multres.errors import PermissibilityError
from multres.poly import embed

from conftest import random_poly


class TestMakeCharts:
    def test_two_charts_for_codim_two(self):
        ring = parse_ring("Q[x1,x2,x3]")
        charts = make_charts(ring, Center(("x1", "x2")))
        assert [c.pivot for c in charts] == ["x1", "x2"]
        x1 = charts[0]
        assert x1.substitution["x2"] == parse("x1*x2", ring)
        assert x1.substitution["x1"] == parse("x1", ring)
        assert x1.substitution["x3"] == parse("x3", ring)
        assert x1.exceptional == ("x1",)

    def test_shifted_center_matches_direct_substitution(self, rxz):
        f = parse("z^2 - x^3", rxz)
        charts = make_charts(rxz, Center(("x", "z"), shift=(1, 0)))
        by_pivot = {c.pivot: c for c in charts}
        # Translate by hand, then blow up at the origin, compare.
        translated = parse("z^2 - (x + 1)^3 + 1 - 1", rxz)
        from multres.poly import translate_to_origin

        translated = translate_to_origin(f, (1, 0))
        plain = {c.pivot: c for c in make_charts(rxz, Center(("x", "z")))}
        for pivot in ("x", "z"):
            assert total_transform(f, by_pivot[pivot]) == total_transform(
                translated, plain[pivot]
            )

    def test_single_variable_center_is_trivial_chart(self, rxy):
        charts = make_charts(rxy, Center(("x",)))
        assert len(charts) == 1
        chart = charts[0]
        assert chart.trivial
        assert chart.substitution["x"] == parse("x", rxy)
        assert chart.exceptional == ("x",)

    def test_unknown_variable_rejected(self, rxy):
        with pytest.raises(ContractError):
            make_charts(rxy, Center(("w",)))

    def test_empty_center_rejected(self, rxy):
        with pytest.raises(ContractError):
            Center(())


class TestTotalTransform:
    def test_cusp_x_chart(self, rxz):
        chart = [c for c in make_charts(rxz, Center(("x", "z"))) if c.pivot == "x"][0]
        assert total_transform(parse("z^2 - x^3", rxz), chart) == parse(
            "x^2*z^2 - x^3", rxz
        )

    def test_constant_fixed(self, rxz):
        chart = make_charts(rxz, Center(("x", "z")))[0]
        c = parse("7", rxz)
        assert total_transform(c, chart) == c

    def test_whitney_z_chart_of_line(self, rxyz):
        chart = [c for c in make_charts(rxyz, Center(("x", "z"))) if c.pivot == "z"][0]
        assert total_transform(parse("z^2 - x^2*y", rxyz), chart) == parse(
            "z^2 - x^2*z^2*y", rxyz
        )


class TestStrictTransformMonic:
    def test_cusp_line_center(self):
        base = parse_ring("Q[x]")
        ring = parse_ring("Q[x,Z]")
        f = parse("Z^2 - x^3", ring)
        center = Center(("x",))
        chart = make_charts(base, center)[0]
        assert strict_transform_monic(f, "Z", center, chart) == parse("Z^2 - x", ring)

    def test_whitney_origin_x_chart(self):
        base = parse_ring("Q[x,y]")
        ring = parse_ring("Q[x,y,Z]")
        f = parse("Z^2 - x^2*y", ring)
        center = Center(("x", "y"))
        chart = [c for c in make_charts(base, center) if c.pivot == "x"][0]
        assert strict_transform_monic(f, "Z", center, chart) == parse("Z^2 - x*y", ring)

    def test_cubic_example(self):
        base = parse_ring("Q[x,y]")
        ring = parse_ring("Q[x,y,Z]")
        f = parse("Z^3 + x^2*y*Z + x^3*y", ring)
        center = Center(("x", "y"))
        chart = [c for c in make_charts(base, center) if c.pivot == "x"][0]
        assert strict_transform_monic(f, "Z", center, chart) == parse(
            "Z^3 + x*y*Z + x*y", ring
        )

    def test_precondition_violation(self):
        base = parse_ring("Q[x]")
        ring = parse_ring("Q[x,Z]")
        f = parse("Z^2 + x", ring)  # order of x along (x) is 1 < 2
        center = Center(("x",))
        chart = make_charts(base, center)[0]
        with pytest.raises(PermissibilityError, match="not permissible"):
            strict_transform_monic(f, "Z", center, chart)

    def test_identity_against_substitute_and_divide(self):
        rng = random.Random(13)
        base = parse_ring("Q[x,y]")
        ring = parse_ring("Q[x,y,Z]")
        z = Polynomial.variable(ring, "Z")
        for _ in range(25):
            s = rng.randint(2, 4)
            center = Center(rng.choice([("x",), ("y",), ("x", "y")]))
            f = z**s
            for j in range(1, s + 1):
                # Force order >= j along the center with a monomial factor.
                if j > 3:
                    continue
                factor = Polynomial.constant(base, 1)
                for _ in range(j):
                    factor = factor * Polynomial.variable(
                        base, rng.choice(center.vars)
                    )
                c = random_poly(rng, base, max_degree=3 - j, terms=2) * factor
                f = f + embed(c, ring) * z ** (s - j)
            for chart in make_charts(base, center):
                strict = strict_transform_monic(f, "Z", center, chart)
                sub = {
                    name: embed(chart.substitution[name], ring)
                    for name in base.variables
                }
                pivot = Polynomial.variable(ring, chart.pivot)
                sub["Z"] = pivot * z
                assert pivot**s * strict == substitute(f, sub, ring)


class TestFunctoriality:
    def test_composed_charts_equal_composed_substitution(self, rxz):
        f = parse("z^2 - x^3", rxz)
        first = [c for c in make_charts(rxz, Center(("x", "z"))) if c.pivot == "x"][0]
        second = [c for c in make_charts(rxz, Center(("x", "z"))) if c.pivot == "z"][0]
        # Flatten: apply first, then second.
        step_by_step = total_transform(total_transform(f, first), second)
        composed = {
            v: substitute(first.substitution[v], second.substitution, rxz)
            for v in rxz.variables
        }
        assert step_by_step == substitute(f, composed, rxz)

    def test_exceptional_history(self, rxz):
        later = make_charts(
            rxz, Center(("x", "z")), step=1, prior_exceptional=("x",)
        )
        by_pivot = {c.pivot: c for c in later}
        # In the x chart the old divisor {x = 0} is the pivot again: only one copy.
        assert by_pivot["x"].exceptional == ("x",)
        # In the z chart the old divisor survives and the new one is appended.
        assert by_pivot["z"].exceptional == ("x", "z")
