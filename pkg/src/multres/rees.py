"""Rees algebras on affine smooth ambients.

An algebra is a finite list of weighted generators f_i W^{n_i}.  Its singular
locus is the set of points where every f_i vanishes to order at least n_i;
closed sets are represented only by generator lists and point membership.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CharacteristicError,
    ContractError,
    ExactDivisionError,
    PermissibilityError,
    RingMismatchError,
)
from .poly import (
    Polynomial,
    differentiate,
    div_exact,
    embed,
    evaluate,
    order_along_coordinate_prime,
    order_at_point,
    substitute,
    translate_to_origin,
)
from .ring import RingCtx


@dataclass(frozen=True, eq=False)
class ReesAlgebra:
    """Finitely generated graded algebra given by weighted generators f_i W^{n_i}."""

    ring: RingCtx
    generators: tuple[tuple[Polynomial, int], ...]

    def __post_init__(self):
        if not self.generators:
            raise ContractError("a Rees algebra needs at least one generator")
        for f, n in self.generators:
            if f.ring != self.ring:
                raise RingMismatchError("generator not over the algebra's ring")
            if not f:
                raise ContractError("generators must be nonzero")
            if not isinstance(n, int) or n < 1:
                raise ContractError(f"weights must be positive integers, got {n}")

    def __eq__(self, other):
        return (
            isinstance(other, ReesAlgebra)
            and self.ring == other.ring
            and self.generators == other.generators
        )

    def __str__(self):
        gens = ", ".join(f"({f})W^{n}" for f, n in self.generators)
        return f"[{gens}] over {self.ring}"


@dataclass(frozen=True, eq=False)
class SingIdeal:
    """Generators cutting out a closed set; an empty list means the whole ambient."""

    ring: RingCtx
    generators: tuple[Polynomial, ...]

    def vanishes_at(self, point) -> bool:
        return all(evaluate(g, point) == 0 for g in self.generators)

    def has_unit(self) -> bool:
        """True when some generator is a nonzero constant, certifying emptiness."""
        return any(g.is_constant() and g for g in self.generators)


def sing_generators(G: ReesAlgebra) -> SingIdeal:
    """All partials of order <= n_i - 1 of each generator; V(result) = Sing G.

    Characteristic 0 only: the differential criterion for order >= n is a
    characteristic-zero device.  Use contains_point in characteristic p.
    """
    if G.ring.characteristic != 0:
        raise CharacteristicError(
            "sing_generators needs characteristic 0; use contains_point instead"
        )
    out: list[Polynomial] = []
    seen = set()
    names = G.ring.variables
    for f, n in G.generators:
        for order in range(n):
            for combo in itertools.combinations_with_replacement(names, order):
                g = f
                for v in combo:
                    g = differentiate(g, v)
                if g and g not in seen:
                    seen.add(g)
                    out.append(g)
    return SingIdeal(G.ring, tuple(out))


def contains_point(G: ReesAlgebra, point) -> bool:
    """Point membership in Sing G: order of each f_i at the point >= n_i."""
    pt = G.ring.point(point)
    return all(order_at_point(f, pt) >= n for f, n in G.generators)


def ord_at(G: ReesAlgebra, point) -> Fraction:
    """min_i order(f_i at point)/n_i, an exact rational >= 1 on Sing G."""
    pt = G.ring.point(point)
    if not contains_point(G, pt):
        raise ContractError("point is not in Sing of the algebra")
    return min(Fraction(order_at_point(f, pt), n) for f, n in G.generators)


def _shift_for(ring: RingCtx, vars: tuple[str, ...], shift) -> tuple:
    """Full-length translation vector moving V(vars - shift) to V(vars)."""
    full = [ring.coeff(0)] * ring.nvars
    if shift is not None:
        shift = tuple(shift)
        if len(shift) != len(vars):
            raise ContractError("shift must align with the center variables")
        for v, s in zip(vars, shift):
            full[ring.index(v)] = ring.coeff(s)
    return tuple(full)


def is_permissible(G: ReesAlgebra, center_vars, shift=None) -> bool:
    """Whether the (optionally translated) coordinate subspace lies in Sing G.

    Checked at the center's generic point via exponent sums; closedness of
    Sing G gives containment of the whole subspace.
    """
    vars = tuple(center_vars)
    if not vars:
        raise ContractError("center needs at least one variable")
    for v in vars:
        G.ring.index(v)
    full_shift = _shift_for(G.ring, vars, shift)
    for f, n in G.generators:
        g = translate_to_origin(f, full_shift) if any(full_shift) else f
        if order_along_coordinate_prime(g, vars) < n:
            return False
    return True


def transform(G: ReesAlgebra, chart) -> ReesAlgebra:
    """Weighted transform: push each generator through the chart, divide by the
    exceptional to its weight.  Exact division failing means the center was not
    permissible."""
    new_gens = []
    pivot = Polynomial.variable(chart.ring, chart.pivot)
    for i, (f, n) in enumerate(G.generators):
        total = substitute(f, chart.substitution, chart.ring)
        try:
            weighted = div_exact(total, pivot**n)
        except ExactDivisionError as exc:
            raise PermissibilityError(
                f"generator {i} ({f})W^{n} is not divisible by {chart.pivot}^{n} "
                f"in chart {chart.pivot!r}: center was not permissible"
            ) from exc
        new_gens.append((weighted, n))
    return ReesAlgebra(chart.ring, tuple(new_gens))


def extend_affine(G: ReesAlgebra, new_vars) -> ReesAlgebra:
    """Pull back along the projection that forgets fresh affine coordinates."""
    new_vars = tuple(new_vars)
    if not new_vars:
        return G
    ring = G.ring.extend(new_vars)
    return ReesAlgebra(ring, tuple((embed(f, ring), n) for f, n in G.generators))


# -- sampled weak-equivalence checks ---------------------------------


@dataclass(frozen=True)
class BoxGrid:
    """Integer box grid {lo..hi}^nvars over the ring's own field."""

    lo: int = -2
    hi: int = 2

    def points(self, ring: RingCtx):
        return itertools.product(range(self.lo, self.hi + 1), repeat=ring.nvars)


@dataclass(frozen=True)
class PrimeGrid:
    """The full grid F_p^nvars after reducing coefficients mod p."""

    p: int

    def points(self, ring: RingCtx):
        return itertools.product(range(self.p), repeat=ring.nvars)


def reduce_mod_p(G: ReesAlgebra, p: int) -> ReesAlgebra:
    """Reduce an integral-coefficient algebra over Q to F_p."""
    if G.ring.characteristic != 0:
        raise CharacteristicError("reduction starts from characteristic 0")
    ring_p = RingCtx(G.ring.variables, p)
    gens = []
    for f, n in G.generators:
        for c in f.terms.values():
            if c.denominator != 1:
                raise CharacteristicError(
                    f"non-integral coefficient {c} cannot be reduced mod {p}"
                )
        gens.append((Polynomial(ring_p, dict(f.terms)), n))
    return ReesAlgebra(ring_p, tuple(gens))


def sing_equal_on_samples(G1: ReesAlgebra, G2: ReesAlgebra, grid) -> bool:
    """Necessary condition for weak equivalence: Sing membership agrees on a grid."""
    if G1.ring != G2.ring:
        raise RingMismatchError("algebras must share a ring")
    if isinstance(grid, PrimeGrid) and G1.ring.characteristic != grid.p:
        A, B = reduce_mod_p(G1, grid.p), reduce_mod_p(G2, grid.p)
        ring = A.ring
    else:
        A, B = G1, G2
        ring = G1.ring
    return all(
        contains_point(A, pt) == contains_point(B, pt) for pt in grid.points(ring)
    )


# -- JSON wire format -------------------------------------------------


def rees_to_json(G: ReesAlgebra) -> dict:
    return {
        "ring": {"variables": list(G.ring.variables), "characteristic": G.ring.characteristic},
        "generators": [{"poly": str(f), "weight": n} for f, n in G.generators],
    }


def rees_from_json(data: dict) -> ReesAlgebra:
    from .parser import parse

    ring = RingCtx(
        tuple(data["ring"]["variables"]), int(data["ring"].get("characteristic", 0))
    )
    gens = tuple(
        (parse(g["poly"], ring), int(g["weight"])) for g in data["generators"]
    )
    return ReesAlgebra(ring, gens)
