"""Local presentations of the n-fold locus.

A presentation is a base ring S together with monic polynomials f_i(X_i) of
degree d_i >= 2 over S in fresh variables.  Its attached Rees algebra lives on
S[X_1..X_M] with generators f_i W^{d_i}; the singular locus of that algebra is
the n-fold locus, and the same data transforms coherently under permissible
blow-ups of the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .blowup import Center, Chart, strict_transform_monic
from .elimination import MonicPoly, tschirnhaus
from .errors import ContractError, PermissibilityError
from .poly import (
    INFINITY,
    Polynomial,
    embed,
    evaluate,
    order_along_coordinate_prime,
    order_at_point,
    translate_to_origin,
)
from .rees import BoxGrid, ReesAlgebra
from .ring import RingCtx
from .univariate import rational_roots, root_multiplicity_by_derivatives, to_poly, trim


@dataclass(frozen=True, eq=False)
class Presentation:
    """Base ring plus monic entries f_i(X_i); the X_i are fresh and distinct."""

    base: RingCtx
    entries: tuple[MonicPoly, ...]

    def __post_init__(self):
        if not self.entries:
            raise ContractError("a presentation needs at least one entry")
        names = [e.var for e in self.entries]
        if len(set(names)) != len(names):
            raise ContractError("presentation variables must be distinct")
        for e in self.entries:
            if e.base != self.base:
                raise ContractError("entries must share the presentation's base ring")

    @property
    def generic_rank(self) -> int:
        """Rank of the complete-intersection model over the base: the product
        of the entry degrees.  The true algebra's rank is not computable from
        the entries alone; this is the value reported in output."""
        rank = 1
        for e in self.entries:
            rank *= e.degree
        return rank

    def __str__(self):
        inner = ", ".join(str(e) for e in self.entries)
        return f"{{{inner}}} over {self.base}"


@dataclass(frozen=True, eq=False)
class PresentationAlgebra:
    ambient: RingCtx
    algebra: ReesAlgebra


def attach_algebra(P: Presentation) -> PresentationAlgebra:
    """The Rees algebra [f_i(X_i) W^{d_i}] on S[X_1..X_M]; its singular locus
    is the n-fold locus inside the ambient."""
    ambient = P.base.extend(tuple(e.var for e in P.entries))
    gens = tuple(
        (embed(e.to_polynomial(), ambient), e.degree) for e in P.entries
    )
    return PresentationAlgebra(ambient, ReesAlgebra(ambient, gens))


@dataclass(frozen=True)
class FactorReport:
    var: str
    degree: int
    witness: object  # value of the Tschirnhaus shift at the point
    orders: tuple  # order of each reduced coefficient b_j at the point
    nfold: bool


@dataclass(frozen=True)
class TransversalityResult:
    ok: bool
    factors: tuple[FactorReport, ...]

    @property
    def witnesses(self) -> tuple:
        return tuple(f.witness for f in self.factors)


def transversality_test(P: Presentation, point) -> TransversalityResult:
    """Whether the unique point above `point` is n-fold, with witness shifts.

    For each entry, center at the Tschirnhaus shift a_1/d and require the
    reduced coefficient b_j to vanish to order >= j at the point.  The witness
    is the fiber coordinate of the candidate d-fold point, -a_1/d evaluated at
    the point (the root of the centered polynomial).
    """
    if P.base.characteristic != 0:
        raise ContractError("the transversality test is a characteristic-0 device")
    pt = P.base.point(point)
    reports = []
    ok = True
    for e in P.entries:
        lam, reduced = tschirnhaus(e)
        orders = tuple(order_at_point(b, pt) for b in reduced)
        passed = all(o >= j for j, o in enumerate(orders, start=2))
        ok = ok and passed
        reports.append(
            FactorReport(
                var=e.var,
                degree=e.degree,
                witness=-evaluate(lam, pt),
                orders=orders,
                nfold=passed,
            )
        )
    return TransversalityResult(ok, tuple(reports))


def lifted_point(P: Presentation, point) -> tuple:
    """The candidate n-fold point of the ambient over `point`.

    Its fiber coordinates are -a_1/d_i evaluated at the point: each entry's
    candidate root after centering.
    """
    pt = P.base.point(point)
    fiber = []
    for e in P.entries:
        lam, _ = tschirnhaus(e)
        fiber.append(-evaluate(lam, pt))
    return pt + tuple(fiber)


def center_is_permissible(P: Presentation, center: Center):
    """Check the coefficient order condition along the center, in witness coordinates.

    Returns (ok, detail).  The center must be a subspace of the base.
    """
    for v in center.vars:
        P.base.index(v)
    shift_full = [P.base.coeff(0)] * P.base.nvars
    for v, s in zip(center.vars, center.shift or ()):
        shift_full[P.base.index(v)] = P.base.coeff(s)
    for e in P.entries:
        _, reduced = tschirnhaus(e)
        for j, b in enumerate(reduced, start=2):
            if not b:
                continue
            moved = translate_to_origin(b, shift_full) if any(shift_full) else b
            order = order_along_coordinate_prime(moved, center.vars)
            if order < j:
                return False, (
                    f"entry {e.var}: reduced coefficient of weight {j} has order "
                    f"{order} < {j} along the center"
                )
    return True, ""


def transform(P: Presentation, center: Center, chart: Chart) -> Presentation:
    """Strict transform of a presentation along one chart of a base blow-up.

    Each entry is first centered at its Tschirnhaus witness, then transformed
    per the chart; degrees are preserved and the new base is the chart ring.
    """
    ok, detail = center_is_permissible(P, center)
    if not ok:
        raise PermissibilityError(f"center not permissible for the presentation: {detail}")
    new_entries = []
    for e in P.entries:
        _, reduced = tschirnhaus(e)
        centered = MonicPoly(P.base, e.var, (Polynomial.zero(P.base),) + reduced)
        moved = strict_transform_monic(
            centered.to_polynomial(), e.var, center, chart
        )
        new_entries.append(MonicPoly.from_polynomial(moved, e.var))
    return Presentation(chart.ring, tuple(new_entries))


# -- Zariski's multiplicity formula as a cross-check -------------------


@dataclass(frozen=True)
class ZariskiReport:
    degree: int
    residual: str
    roots: tuple[tuple[Fraction, int], ...]
    lhs: int
    rhs: int
    verdict: str  # "equal" or "inconclusive"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "residual": self.residual,
            "roots": [{"root": str(r), "multiplicity": m} for r, m in self.roots],
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
        }


def zariski_check(f: MonicPoly, point) -> ZariskiReport:
    """deg(f) = sum of root multiplicities of the residue polynomial at a point.

    The left side is the rank of the extension; the right side sums fiber
    multiplicities, computed by counting vanishing derivatives at each
    rational root.  If the residue polynomial does not split over Q, the
    report is inconclusive rather than an error.
    """
    if f.base.characteristic:
        raise ContractError(f"Zariski check runs over Q, not F{f.base.characteristic}")
    pt = f.base.point(point)
    # Residue polynomial Z^n + sum a_i(p) Z^{n-i}, stored ascending.
    coeffs = [Fraction(1)] + [evaluate(a, pt) for a in f.coefficients]
    residual = trim(list(reversed(coeffs)))
    roots, _ = rational_roots(list(residual))
    verified = []
    total = 0
    for root, _division_mult in roots:
        mult = root_multiplicity_by_derivatives(list(residual), root)
        verified.append((root, mult))
        total += mult
    n = f.degree
    verdict = "equal" if total == n else "inconclusive"
    fiber_ring = RingCtx((f.var,), 0)
    residual_str = str(to_poly(residual, fiber_ring, f.var))
    return ZariskiReport(
        degree=n,
        residual=residual_str,
        roots=tuple(verified),
        lhs=n,
        rhs=total,
        verdict=verdict,
    )


# -- stratification checks ---------------------------------------------


def multiplicity_profile(P: Presentation, point) -> tuple[bool, ...]:
    """Per-entry boolean vector: does entry i satisfy its d_i-fold condition at the point."""
    return tuple(f.nfold for f in transversality_test(P, point).factors)


def generic_membership(P: Presentation, subvariety_vars, shift=None) -> bool:
    """n-fold membership at the generic point of a translated coordinate subvariety."""
    vars = tuple(subvariety_vars)
    for v in vars:
        P.base.index(v)
    shift_full = [P.base.coeff(0)] * P.base.nvars
    if shift is not None:
        for v, s in zip(vars, shift):
            shift_full[P.base.index(v)] = P.base.coeff(s)
    for e in P.entries:
        _, reduced = tschirnhaus(e)
        for j, b in enumerate(reduced, start=2):
            if not b:
                continue
            moved = translate_to_origin(b, shift_full) if any(shift_full) else b
            if order_along_coordinate_prime(moved, vars) < j:
                return False
    return True


def max_mult_upper_bound_check(P: Presentation, grid: BoxGrid = BoxGrid()) -> bool:
    """Monotonicity of n-fold membership under specialization, sampled on a grid.

    For every coordinate subvariety through a grid slice: if the generic point
    is n-fold, every sampled rational point on the subvariety must be n-fold.
    Also sanity-checks that nonzero reduced coefficients have finite order at
    every grid point.
    """
    ring = P.base
    # Finite orders at every grid point for every nonzero reduced coefficient.
    for e in P.entries:
        _, reduced = tschirnhaus(e)
        for b in reduced:
            if not b:
                continue
            for pt in grid.points(ring):
                if order_at_point(b, pt) == INFINITY:
                    return False
    # Specialization chains: single-variable subvarieties through grid values.
    for k, name in enumerate(ring.variables):
        for c in range(grid.lo, grid.hi + 1):
            if not generic_membership(P, (name,), (c,)):
                continue
            for pt in grid.points(ring):
                if pt[k] == c and not transversality_test(P, pt).ok:
                    return False
    return True
