"""Exact singular-point solving for plane curves via Sylvester resultants.

Candidate coordinates come from eliminating each variable in turn; rational
candidates are verified by exact evaluation.  The result is certified complete
when the candidate polynomials have no roots left after rational extraction.
A curve is split into univariate contents and a primitive part first, so line
components and their crossings are handled exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError
from .poly import Polynomial, coefficients_in, differentiate, div_exact, evaluate
from .resultant import resultant_bivariate
from . import univariate as uni


@dataclass(frozen=True)
class SolveResult:
    """Rational common zeros of a plane system, with completeness flags.

    certified: the listed points are provably all common zeros.
    irrational: a common zero with non-rational coordinates provably exists.
    """

    points: tuple[tuple[Fraction, Fraction], ...]
    certified: bool
    irrational: bool


def _content_and_primitive(f: Polynomial, main: str, other: str):
    """Write f = content(other) * primitive, content univariate in `other`."""
    coeffs = [c for c in coefficients_in(f, main) if c]
    lists = [uni.from_poly(c, other) for c in coeffs]
    g = uni.gcd_many(lists)
    if uni.is_constant(g):
        return Polynomial.constant(f.ring, 1), f
    content = uni.to_poly(g, f.ring, other)
    return content, div_exact(f, content)


def split_components(f: Polynomial, x: str, y: str):
    """f = cx(x) * cy(y) * p with p free of univariate factors."""
    cx, rest = _content_and_primitive(f, y, x)
    cy, prim = _content_and_primitive(rest, x, y)
    return cx, cy, prim


def _solve_fiber(polys: list[Polynomial], fixed_var: str, value: Fraction, free_var: str):
    """Rational roots of the gcd of a system restricted to fixed_var = value.

    Returns (roots, leftover_nonconstant) where the leftover flag means the
    restricted system has further non-rational common roots.
    """
    ring = polys[0].ring
    i = ring.index(fixed_var)
    lists = []
    for f in polys:
        restricted: dict = {}
        for expo, c in f.terms.items():
            e = list(expo)
            scaled = c * value ** e[i]
            e[i] = 0
            key = tuple(e)
            restricted[key] = restricted.get(key, Fraction(0)) + scaled
        g = Polynomial(ring, restricted)
        lists.append(uni.from_poly(g, free_var))
    g = uni.gcd_many(lists)
    if not g:
        # Every member vanishes identically on the fiber: a one-dimensional
        # component, which the callers exclude by squarefreeness.
        raise ContractError("system vanishes along a whole fiber")
    if uni.is_constant(g):
        return [], False
    roots, leftover = uni.rational_roots(g)
    return [r for r, _ in roots], leftover > 0


def solve_plane_system(polys) -> SolveResult:
    """Rational common zeros of finitely many polynomials in a 2-variable ring.

    The system must be zero-dimensional (no common curve components).
    """
    polys = [f for f in polys if f]
    if not polys:
        raise ContractError("cannot solve an empty or identically-zero system")
    ring = polys[0].ring
    if ring.nvars != 2 or ring.characteristic != 0:
        raise ContractError("plane solving works over Q in exactly 2 variables")
    x, y = ring.variables
    if any(f.is_constant() for f in polys):
        return SolveResult((), True, False)

    def eliminate(var_kept: str, var_gone: str):
        """gcd of pairwise resultants: candidate polynomial for the kept coordinate.

        Vanishing resultants (a pair sharing a curve factor) are skipped; the
        system is rejected only if no elimination constrains the coordinate at
        all, which means it cannot be zero-dimensional.
        """
        with_gone = [f for f in polys if f.uses(var_gone)]
        without = [f for f in polys if not f.uses(var_gone)]
        cands: list[list[Fraction]] = [uni.from_poly(f, var_kept) for f in without]
        for i in range(len(with_gone)):
            for j in range(i + 1, len(with_gone)):
                res = resultant_bivariate(with_gone[i], with_gone[j], var_gone)
                if res:
                    cands.append(uni.from_poly(res, var_kept))
        if not cands:
            raise ContractError("system is not zero-dimensional")
        return uni.gcd_many(cands)

    dx = eliminate(x, y)
    dy = eliminate(y, x)

    points: set[tuple[Fraction, Fraction]] = set()
    irrational = False
    uncertain = False

    def sweep(cand, fixed_var, free_var, make_point):
        nonlocal irrational, uncertain
        if not cand:
            uncertain = True
            return True  # no candidate polynomial: cannot bound this direction
        if uni.is_constant(cand):
            return False  # no common zeros project to this axis
        roots, leftover = uni.rational_roots(cand)
        for r, _ in roots:
            fiber_roots, fiber_leftover = _solve_fiber(polys, fixed_var, r, free_var)
            if fiber_leftover:
                irrational = True
            for s in fiber_roots:
                points.add(make_point(r, s))
        return leftover > 0

    x_leftover = sweep(dx, x, y, lambda r, s: (r, s))
    y_leftover = sweep(dy, y, x, lambda r, s: (s, r))

    verified = tuple(
        sorted(pt for pt in points if all(evaluate(f, pt) == 0 for f in polys))
    )
    certified = not (x_leftover and y_leftover) and not irrational and not uncertain
    return SolveResult(verified, certified, irrational)


def is_squarefree(f: Polynomial) -> bool:
    """Squarefreeness over Q via contents plus one resultant test."""
    if not f:
        raise ContractError("the zero polynomial is not squarefree")
    ring = f.ring
    if ring.nvars != 2 or ring.characteristic != 0:
        raise ContractError("squarefreeness check works over Q in 2 variables")
    x, y = ring.variables
    if f.is_constant():
        return True
    cx, cy, prim = split_components(f, x, y)

    def uni_squarefree(g: Polynomial, var: str) -> bool:
        lst = uni.from_poly(g, var)
        if uni.is_constant(lst):
            return True
        return uni.is_constant(uni.gcd_uni(lst, uni.derivative(lst)))

    if not uni_squarefree(cx, x) or not uni_squarefree(cy, y):
        return False
    if prim.is_constant():
        return True
    if not prim.uses(y):
        return uni_squarefree(prim, x)
    if not prim.uses(x):
        return uni_squarefree(prim, y)
    return bool(resultant_bivariate(prim, differentiate(prim, y), y))


def singular_points(f: Polynomial) -> SolveResult:
    """Points where a squarefree plane curve has multiplicity >= 2.

    These are the common zeros of f and both partials: singular points of each
    component plus all pairwise component intersections.  Components are
    handled separately so that line factors do not defeat the elimination.
    """
    ring = f.ring
    x, y = ring.variables
    cx, cy, prim = split_components(f, x, y)
    points: set[tuple[Fraction, Fraction]] = set()
    certified = True
    irrational = False

    cx_list = uni.from_poly(cx, x) if not cx.is_constant() else []
    cy_list = uni.from_poly(cy, y) if not cy.is_constant() else []
    cx_roots, cx_left = uni.rational_roots(cx_list) if cx_list else ([], 0)
    cy_roots, cy_left = uni.rational_roots(cy_list) if cy_list else ([], 0)

    # Crossings of vertical and horizontal line components.
    if cx_list and cy_list:
        for r, _ in cx_roots:
            for s, _ in cy_roots:
                points.add((r, s))
        if cx_left or cy_left:
            # Some crossing involves an irrational line.
            irrational = True
            certified = False

    def meet_lines(roots, leftover, fixed_var, free_var, make_point, other_curve):
        """Intersections of a line family with another component."""
        nonlocal certified, irrational
        if other_curve.is_constant():
            return
        for r, _ in roots:
            fiber_roots, fiber_leftover = _solve_fiber(
                [other_curve], fixed_var, r, free_var
            )
            if fiber_leftover:
                irrational = True
                certified = False
            for s in fiber_roots:
                points.add(make_point(r, s))
        if leftover:
            # The component family has irrational members; whether they meet
            # the other curve is not decided rationally.
            certified = False

    meet_lines(cx_roots, cx_left, x, y, lambda r, s: (r, s), cy * prim)
    meet_lines(cy_roots, cy_left, y, x, lambda r, s: (s, r), cx * prim)

    # Singular points of the primitive part.
    if not prim.is_constant() and prim.uses(x) and prim.uses(y):
        sub = solve_plane_system(
            [prim, differentiate(prim, x), differentiate(prim, y)]
        )
        points.update(sub.points)
        certified = certified and sub.certified
        irrational = irrational or sub.irrational

    verified = tuple(
        sorted(
            pt
            for pt in points
            if evaluate(f, pt) == 0
            and evaluate(differentiate(f, x), pt) == 0
            and evaluate(differentiate(f, y), pt) == 0
        )
    )
    return SolveResult(verified, certified, irrational)
