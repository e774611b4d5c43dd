"""Characteristic-zero elimination algebras of monic polynomials.

The Tschirnhaus substitution Z -> Z - a_1/n kills the subleading coefficient;
the reduced coefficients b_2..b_n, weighted by their index, generate an
algebra on the base whose singular locus is the image of the n-fold points of
the hypersurface.  That algebra is invariant under Z -> Z - lambda and scales
like its weights, and its weighted transform commutes with blowing up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .blowup import Center, make_charts
from .errors import CharacteristicError, ContractError, RingMismatchError
from .poly import Polynomial, _grlex_key, coefficients_in, embed, substitute
from .rees import (
    BoxGrid,
    ReesAlgebra,
    SingIdeal,
    is_permissible,
    sing_equal_on_samples,
    sing_generators,
    transform as rees_transform,
)
from .ring import RingCtx

# An elimination algebra is an ordinary Rees algebra on the base whose
# generators are weighted-homogeneous in the coefficients (a_i of weight i).
ElimAlgebra = ReesAlgebra


@dataclass(frozen=True, eq=False)
class MonicPoly:
    """Z^n + a_1 Z^{n-1} + ... + a_n with coefficients over a base ring, n >= 2."""

    base: RingCtx
    var: str
    coefficients: tuple[Polynomial, ...]  # a_1 .. a_n

    def __post_init__(self):
        if self.var in self.base.variables:
            raise ContractError(f"monic variable {self.var!r} collides with the base ring")
        if len(self.coefficients) < 2:
            raise ContractError("monic degree must be at least 2")
        for a in self.coefficients:
            if a.ring != self.base:
                raise RingMismatchError("coefficients must live over the base ring")

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    @property
    def ambient(self) -> RingCtx:
        return self.base.extend((self.var,))

    def to_polynomial(self) -> Polynomial:
        ring = self.ambient
        z = Polynomial.variable(ring, self.var)
        out = z ** self.degree
        for i, a in enumerate(self.coefficients, start=1):
            out = out + embed(a, ring) * z ** (self.degree - i)
        return out

    @classmethod
    def from_polynomial(cls, f: Polynomial, var: str) -> "MonicPoly":
        """Split a monic polynomial over base+var into base and coefficients."""
        coeffs = coefficients_in(f, var)
        n = len(coeffs) - 1
        if n < 2:
            raise ContractError("monic degree must be at least 2")
        if coeffs[n] != Polynomial.constant(f.ring, 1):
            raise ContractError(f"polynomial is not monic in {var!r}")
        base_names = tuple(v for v in f.ring.variables if v != var)
        if len(base_names) == f.ring.nvars:
            raise ContractError(f"{var!r} is not a variable of the ring")
        base = RingCtx(base_names, f.ring.characteristic)

        def drop(p: Polynomial) -> Polynomial:
            i = f.ring.index(var)
            terms = {}
            for expo, c in p.terms.items():
                e = tuple(x for j, x in enumerate(expo) if j != i)
                terms[e] = c
            return Polynomial(base, terms)

        return cls(base, var, tuple(drop(coeffs[n - i]) for i in range(1, n + 1)))

    def __str__(self):
        return str(self.to_polynomial())


def tschirnhaus(f: MonicPoly):
    """Shift lambda = a_1/n and the reduced coefficients b_2..b_n.

    Substituting Z -> Z - a_1/n kills the degree-(n-1) coefficient; each b_j
    is weighted-homogeneous of degree j in the a_i (a_i of weight i).  Needs
    the characteristic not to divide n.
    """
    n = f.degree
    p = f.base.characteristic
    if p and n % p == 0:
        raise CharacteristicError(f"characteristic {p} divides the degree {n}")
    ring = f.ambient
    lam = f.coefficients[0] * Fraction(1, n) if p == 0 else f.coefficients[0] * pow(n, -1, p)
    mapping = {v: Polynomial.variable(ring, v) for v in ring.variables}
    mapping[f.var] = Polynomial.variable(ring, f.var) - embed(lam, ring)
    shifted = substitute(f.to_polynomial(), mapping, ring)
    reduced = MonicPoly.from_polynomial(shifted, f.var)
    if reduced.coefficients[0]:
        raise AssertionError("Tschirnhaus shift failed to kill the subleading coefficient")
    return lam, reduced.coefficients[1:]


def elim_generators(f: MonicPoly) -> tuple[tuple[Polynomial, int], ...]:
    """The nonzero reduced coefficients with their weights, (b_j, j) for j = 2..n."""
    _, reduced = tschirnhaus(f)
    return tuple((b, j) for j, b in enumerate(reduced, start=2) if b)


def elim_algebra(f: MonicPoly) -> ElimAlgebra:
    """The elimination algebra of f on its base ring.

    Raises on the totally degenerate input Z^n, whose n-fold image is all of
    Spec(base); image_nfold handles that case as the whole-space locus.
    """
    gens = elim_generators(f)
    if not gens:
        raise ContractError(
            "all elimination generators vanish (input is a pure power); "
            "the n-fold image is the whole base"
        )
    return ReesAlgebra(f.base, gens)


def image_nfold(f: MonicPoly) -> SingIdeal:
    """Generators of the image of the n-fold locus of {f = 0} in the base."""
    gens = elim_generators(f)
    if not gens:
        return SingIdeal(f.base, ())
    return sing_generators(ReesAlgebra(f.base, gens))


# -- canonical generator comparison -----------------------------------


def _canonical_key(f: Polynomial):
    return tuple(
        sorted(((expo, c) for expo, c in f.terms.items()), key=lambda t: _grlex_key(t[0]))
    )


def normalize_generators(G: ReesAlgebra) -> tuple[tuple[Polynomial, int], ...]:
    """Sort by (weight, canonical order) and scale unit leading coefficients to 1."""
    normed = []
    for f, n in G.generators:
        _, lead = f.leading()
        normed.append((f * G.ring.coeff_inv(lead), n))
    return tuple(sorted(normed, key=lambda g: (g[1], _canonical_key(g[0]))))


def generators_equal(G1: ReesAlgebra, G2: ReesAlgebra) -> bool:
    return G1.ring == G2.ring and normalize_generators(G1) == normalize_generators(G2)


# -- invariance laws ---------------------------------------------------


def check_translation_invariance(f: MonicPoly, lam: Polynomial) -> bool:
    """Elimination generators are unchanged under Z -> Z - lambda."""
    if lam.ring != f.base:
        raise RingMismatchError("the shift must live over the base ring")
    ring = f.ambient
    mapping = {v: Polynomial.variable(ring, v) for v in ring.variables}
    mapping[f.var] = Polynomial.variable(ring, f.var) - embed(lam, ring)
    moved = MonicPoly.from_polynomial(substitute(f.to_polynomial(), mapping, ring), f.var)
    left = elim_generators(f)
    right = elim_generators(moved)
    if not left and not right:
        return True
    if bool(left) != bool(right):
        return False
    return generators_equal(ReesAlgebra(f.base, left), ReesAlgebra(f.base, right))


def scaling_law_holds(n: int) -> bool:
    """b_j(u a_1, u^2 a_2, ..., u^n a_n) = u^j b_j(a) on the universal ring."""
    names = tuple(f"a{i}" for i in range(1, n + 1))
    base = RingCtx(names)
    universal = MonicPoly(
        base, "Z", tuple(Polynomial.variable(base, v) for v in names)
    )
    _, reduced = tschirnhaus(universal)
    big = base.extend(("u",))
    u = Polynomial.variable(big, "u")
    scaling = {
        name: Polynomial.variable(big, name) * u**i
        for i, name in enumerate(names, start=1)
    }
    scaling["u"] = u
    for j, b in enumerate(reduced, start=2):
        lifted = embed(b, big)
        scaled = substitute(lifted, scaling, big)
        if scaled != lifted * u**j:
            return False
    return True


def check_scaling_law(f: MonicPoly) -> bool:
    """The scaling law for f's degree, verified on the universal coefficient ring.

    Substituting a_i -> u^i a_i is only meaningful symbolically, so the check
    runs on generic coefficients; concrete generators inherit the law by
    specialization.
    """
    if f.base.characteristic != 0:
        raise CharacteristicError("the scaling check is a characteristic-0 statement")
    return scaling_law_holds(f.degree)


# -- presentations ------------------------------------------------------


def elim_of_presentation(P) -> ElimAlgebra:
    """Union of the elimination generators of every entry of a presentation."""
    gens: list[tuple[Polynomial, int]] = []
    for entry in P.entries:
        gens.extend(elim_generators(entry))
    if not gens:
        raise ContractError(
            "every entry is a pure power; the n-fold image is the whole base"
        )
    return ReesAlgebra(P.base, tuple(gens))


def check_commutation(P, center: Center, grid: BoxGrid = BoxGrid()) -> bool:
    """Elimination-then-transform equals transform-then-elimination, chartwise.

    Compared generator-by-generator after normalization; sampled Sing equality
    is the documented fallback.  A non-permissible center is an error, not
    False.
    """
    from .presentation import transform as presentation_transform

    algebra = elim_of_presentation(P)
    if not is_permissible(algebra, center.vars, center.shift):
        raise ContractError("center is not permissible for the elimination algebra")
    for chart in make_charts(P.base, center):
        left = rees_transform(algebra, chart)
        right = elim_of_presentation(presentation_transform(P, center, chart))
        if not generators_equal(left, right):
            if not sing_equal_on_samples(left, right, grid):
                return False
    return True
