"""Blow-up chart atlases of affine space at translated coordinate subspaces.

Charts keep the parent variable names: the x-chart of a blow-up at (x, z)
carries the substitution {x -> x, z -> x*z}.  Shifted centers fold the
translation into the substitution, so downstream work stays in shifted
coordinates and total transforms are plain substitutions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContractError, ExactDivisionError, PermissibilityError
from .poly import (
    Polynomial,
    coefficients_in,
    div_exact,
    embed,
    order_along_coordinate_prime,
    substitute,
    translate_to_origin,
)
from .ring import RingCtx


@dataclass(frozen=True)
class Center:
    """A blow-up center: a coordinate subspace V(vars), optionally translated.

    `shift` aligns with `vars`: the center is cut out by v_i - shift_i.  A
    single-variable center yields the identity atlas with one trivial chart.
    """

    vars: tuple[str, ...]
    shift: tuple | None = None

    def __post_init__(self):
        if not self.vars:
            raise ContractError("center needs at least one variable")
        if len(set(self.vars)) != len(self.vars):
            raise ContractError("center variables must be distinct")
        if self.shift is not None and len(self.shift) != len(self.vars):
            raise ContractError("center shift must align with its variables")

    def shift_point(self, ring: RingCtx) -> tuple:
        """Full-length translation vector (zero on non-center variables)."""
        full = [ring.coeff(0)] * ring.nvars
        if self.shift is not None:
            for v, s in zip(self.vars, self.shift):
                full[ring.index(v)] = ring.coeff(s)
        return tuple(full)


@dataclass(frozen=True, eq=False)
class Chart:
    """One affine chart of a blow-up, in the coordinates after the center shift.

    `substitution` maps every parent variable to its expression in this
    chart's coordinates (shift included), so the total transform of f is just
    substitute(f, substitution, ring).  `exceptional` lists the divisor
    variables visible in this chart, oldest first; `pivot` is the newest.
    """

    ring: RingCtx
    parent_ring: RingCtx
    path: tuple[tuple[int, str], ...]
    substitution: dict = field(repr=False)
    pivot: str
    exceptional: tuple[str, ...]
    trivial: bool = False


def make_charts(
    ring: RingCtx,
    center: Center,
    step: int = 0,
    path_prefix: tuple[tuple[int, str], ...] = (),
    prior_exceptional: tuple[str, ...] = (),
) -> list[Chart]:
    """The chart atlas of the blow-up of Spec(ring) at the center.

    One chart per pivot variable, ordered by pivot name.  In the pivot-t
    chart, x_j maps to t*x_j for the other center variables; everything else
    is fixed.  A codimension-one center degenerates to a single identity
    chart, flagged trivial, whose exceptional is the center itself.
    """
    for v in center.vars:
        ring.index(v)
    shift = center.shift_point(ring)

    def image(name: str, pivot: str) -> Polynomial:
        base = Polynomial.variable(ring, name)
        if name in center.vars and name != pivot:
            base = base * Polynomial.variable(ring, pivot)
        return base + Polynomial.constant(ring, shift[ring.index(name)])

    charts = []
    trivial = len(center.vars) == 1
    for pivot in sorted(center.vars):
        sub = {name: image(name, pivot) for name in ring.variables}
        charts.append(
            Chart(
                ring=ring,
                parent_ring=ring,
                path=path_prefix + ((step, pivot),),
                substitution=sub,
                pivot=pivot,
                exceptional=transform_exceptional(prior_exceptional, center, pivot)
                + (pivot,),
                trivial=trivial,
            )
        )
    return charts


def transform_exceptional(
    prior: tuple[str, ...], center: Center, pivot: str
) -> tuple[str, ...]:
    """Strict transforms of earlier exceptional hypersurfaces in the pivot chart.

    A coordinate hypersurface {v = 0} stays {v = 0} unless v is the pivot
    itself, whose strict transform misses this chart entirely.
    """
    return tuple(v for v in prior if v != pivot)


def total_transform(f: Polynomial, chart: Chart) -> Polynomial:
    """Image of f under the chart substitution."""
    if f.ring != chart.parent_ring:
        raise ContractError("polynomial is not over the chart's parent ring")
    return substitute(f, chart.substitution, chart.ring)


def strict_transform_monic(
    f: Polynomial, z: str, center: Center, chart: Chart
) -> Polynomial:
    """Strict transform of a monic hypersurface equation along a base chart.

    f must be monic of degree s in `z` with coefficients c_j in the base ring,
    and each c_j (after the center shift) must vanish to order >= j along the
    center.  The result is Z^s + sum_j (c_j o chart)/pivot^j Z^{s-j}; it
    satisfies pivot^s * result = total transform of f under z -> pivot*z.
    """
    ring = f.ring
    ring.index(z)
    if z in center.vars:
        raise ContractError("the monic variable cannot be part of the base center")
    base_vars = set(chart.parent_ring.variables)
    if base_vars | {z} != set(ring.variables) or z in base_vars:
        raise ContractError(
            "the chart must live on the base ring (all variables of f except the monic one)"
        )
    coeffs = coefficients_in(f, z)
    s = len(coeffs) - 1
    if s < 1 or coeffs[s] != Polynomial.constant(ring, 1):
        raise ContractError(f"polynomial is not monic in {z!r}")
    shift_full = [ring.coeff(0)] * ring.nvars
    for v, val in zip(center.vars, center.shift or ()):
        shift_full[ring.index(v)] = ring.coeff(val)
    for j in range(1, s + 1):
        c = coeffs[s - j]
        if not c:
            continue
        shifted = translate_to_origin(c, shift_full) if any(shift_full) else c
        order = order_along_coordinate_prime(shifted, center.vars)
        if order < j:
            raise PermissibilityError(
                f"center not permissible for this hypersurface: coefficient of "
                f"{z}^{s - j} has order {order} < {j} along the center"
            )
    # Extend the base chart over z by the identity; names are stable, so the
    # output lives over the same ring as f.
    big_sub = {
        name: embed(chart.substitution[name], ring)
        for name in chart.parent_ring.variables
    }
    big_sub[z] = Polynomial.variable(ring, z)
    pivot = Polynomial.variable(ring, chart.pivot)
    out = Polynomial.variable(ring, z) ** s
    for j in range(1, s + 1):
        c = coeffs[s - j]
        if not c:
            continue
        moved = substitute(c, big_sub, ring)
        try:
            divided = div_exact(moved, pivot**j)
        except ExactDivisionError as exc:  # pragma: no cover - guarded above
            raise PermissibilityError(
                f"coefficient of {z}^{s - j} is not divisible by {chart.pivot}^{j}"
            ) from exc
        out = out + divided * Polynomial.variable(ring, z) ** (s - j)
    return out


