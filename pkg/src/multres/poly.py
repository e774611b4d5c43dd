"""Exact sparse multivariate polynomials and the order functions built on them.

A polynomial is a map from exponent tuples (one entry per ring variable) to
nonzero coefficients.  The canonical term order is graded lexicographic on the
declared variable order; printing follows it so that parse(str(f)) == f.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import (
    ContractError,
    DimensionError,
    ExactDivisionError,
    RingMismatchError,
)
from .ring import RingCtx


class _Infinity:
    """Order of the zero polynomial.  Compares above every finite order."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __ge__(self, other):
        return True

    def __gt__(self, other):
        return not isinstance(other, _Infinity)

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __lt__(self, other):
        return False

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __hash__(self):
        return hash("multres-infinity")

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def _grlex_key(expo: tuple[int, ...]) -> tuple:
    return (sum(expo), expo)


class Polynomial:
    """Immutable sparse polynomial over a RingCtx.

    `terms` maps exponent tuples to nonzero coefficients (Fraction in
    characteristic 0, ints in [0, p) in characteristic p).
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingCtx, terms: Mapping[tuple[int, ...], object]):
        cleaned: dict[tuple[int, ...], object] = {}
        n = ring.nvars
        for expo, coeff in terms.items():
            expo = tuple(expo)
            if len(expo) != n:
                raise DimensionError(f"exponent {expo} has wrong length for {ring}")
            if any(e < 0 or not isinstance(e, int) for e in expo):
                raise ContractError(f"exponents must be nonnegative integers, got {expo}")
            c = ring.coeff(coeff)
            if c:
                cleaned[expo] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: RingCtx) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def constant(cls, ring: RingCtx, value) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: ring.coeff(value)})

    @classmethod
    def variable(cls, ring: RingCtx, name: str) -> "Polynomial":
        expo = [0] * ring.nvars
        expo[ring.index(name)] = 1
        return cls(ring, {tuple(expo): 1})

    @classmethod
    def monomial(cls, ring: RingCtx, expo: Iterable[int], coeff=1) -> "Polynomial":
        return cls(ring, {tuple(expo): coeff})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.ring.nvars}

    def constant_value(self):
        """The value of a constant polynomial."""
        if not self.is_constant():
            raise ContractError("polynomial is not constant")
        return self.terms.get((0,) * self.ring.nvars, self.ring.coeff(0))

    def total_degree(self):
        if not self.terms:
            return INFINITY
        return max(sum(e) for e in self.terms)

    def min_degree(self):
        """Smallest total degree over the support; INFINITY for zero."""
        if not self.terms:
            return INFINITY
        return min(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = self.ring.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def leading(self) -> tuple[tuple[int, ...], object]:
        """Leading (exponent, coefficient) in graded lex order."""
        if not self.terms:
            raise ContractError("zero polynomial has no leading term")
        expo = max(self.terms, key=_grlex_key)
        return expo, self.terms[expo]

    def uses(self, name: str) -> bool:
        i = self.ring.index(name)
        return any(e[i] for e in self.terms)

    # -- arithmetic ---------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for expo, c in other.terms.items():
            out[expo] = out.get(expo, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out: dict[tuple[int, ...], object] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                expo = tuple(x + y for x, y in zip(ea, eb))
                out[expo] = out.get(expo, 0) + ca * cb
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ContractError(f"polynomial power must be a nonnegative integer, got {n}")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            h = hash((self.ring, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    # -- printing -----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for expo in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[expo]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.variables, expo)
                if e
            )
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"{' - ' if negative else ' + '}{body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self.ring}, {self})"


# -- calculus and ring maps -------------------------------------------


def differentiate(f: Polynomial, var: str, times: int = 1) -> Polynomial:
    """Iterated formal partial derivative."""
    i = f.ring.index(var)
    if times < 0:
        raise ContractError("derivative count must be nonnegative")
    for _ in range(times):
        out: dict[tuple[int, ...], object] = {}
        for expo, c in f.terms.items():
            if expo[i]:
                e = list(expo)
                k = e[i]
                e[i] = k - 1
                key = tuple(e)
                out[key] = out.get(key, 0) + c * k
        f = Polynomial(f.ring, out)
    return f


def substitute(
    f: Polynomial, mapping: Mapping[str, Polynomial], target: RingCtx
) -> Polynomial:
    """Ring homomorphism sending each source variable to a polynomial over target.

    Every variable of f's ring must be mapped, and every image must live over
    `target` (same characteristic).
    """
    source = f.ring
    if target.characteristic != source.characteristic:
        raise RingMismatchError("substitution cannot change the characteristic")
    images = []
    for name in source.variables:
        if name not in mapping:
            raise ContractError(f"incomplete substitution map: {name!r} not mapped")
        img = mapping[name]
        if not isinstance(img, Polynomial) or img.ring != target:
            raise RingMismatchError(f"image of {name!r} is not over the target ring")
        images.append(img)
    power_cache: list[dict[int, Polynomial]] = [dict() for _ in images]
    out = Polynomial.zero(target)
    for expo, c in f.terms.items():
        term = Polynomial.constant(target, c)
        for i, e in enumerate(expo):
            if not e:
                continue
            cached = power_cache[i].get(e)
            if cached is None:
                cached = images[i] ** e
                power_cache[i][e] = cached
            term = term * cached
        out = out + term
    return out


def embed(f: Polynomial, target: RingCtx) -> Polynomial:
    """Reinterpret f over a larger ring containing all of its variables (by name)."""
    positions = [target.index(v) for v in f.ring.variables]
    out: dict[tuple[int, ...], object] = {}
    for expo, c in f.terms.items():
        e = [0] * target.nvars
        for pos, k in zip(positions, expo):
            e[pos] = k
        out[tuple(e)] = c
    return Polynomial(target, out)


def evaluate(f: Polynomial, point) -> object:
    """Exact value of f at a point of the coefficient field."""
    pt = f.ring.point(point)
    total = f.ring.coeff(0)
    for expo, c in f.terms.items():
        term = c
        for v, e in zip(pt, expo):
            if e:
                term = term * v**e
        total = total + term
    return f.ring.coeff(total)


def translate_to_origin(f: Polynomial, point) -> Polynomial:
    """The polynomial g with g(v) = f(v + point), so g(0) = f(point)."""
    pt = f.ring.point(point)
    mapping = {
        name: Polynomial.variable(f.ring, name) + Polynomial.constant(f.ring, c)
        for name, c in zip(f.ring.variables, pt)
    }
    return substitute(f, mapping, f.ring)


# -- order functions ------------------------------------------------


def order_at_point(f: Polynomial, point):
    """Order of vanishing of f at a rational point; INFINITY for the zero polynomial."""
    return translate_to_origin(f, point).min_degree()


def order_along_coordinate_prime(f: Polynomial, vars: Iterable[str]):
    """Order of f at the generic point of the coordinate subspace V(vars).

    This is the minimum over terms of the summed exponents of the selected
    variables.
    """
    names = tuple(vars)
    if not names:
        raise ContractError("need a nonempty variable subset")
    idx = [f.ring.index(v) for v in names]
    if not f.terms:
        return INFINITY
    return min(sum(expo[i] for i in idx) for expo in f.terms)


def weighted_degree(f: Polynomial, weights: Mapping[str, int]):
    """(min, max, homogeneous?) weighted degree over the support of f.

    Every ring variable needs a positive weight.  The zero polynomial is
    homogeneous by convention with INFINITY degrees.
    """
    w = []
    for name in f.ring.variables:
        if name not in weights:
            raise ContractError(f"missing weight for {name!r}")
        if weights[name] < 1:
            raise ContractError(f"weight for {name!r} must be positive")
        w.append(weights[name])
    if not f.terms:
        return (INFINITY, INFINITY, True)
    degs = [sum(wi * e for wi, e in zip(w, expo)) for expo in f.terms]
    lo, hi = min(degs), max(degs)
    return (lo, hi, lo == hi)


# -- exact division -------------------------------------------------


def div_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient of an exact division f = q*g; raises if the division leaves a remainder."""
    if isinstance(g, Polynomial):
        f._check_ring(g)
    else:
        g = Polynomial.constant(f.ring, g)
    if not g:
        raise ExactDivisionError("division by the zero polynomial")
    ring = f.ring
    g_expo, g_coeff = g.leading()
    g_inv = ring.coeff_inv(g_coeff)
    quotient: dict[tuple[int, ...], object] = {}
    rem = f
    while rem.terms:
        r_expo, r_coeff = rem.leading()
        delta = tuple(a - b for a, b in zip(r_expo, g_expo))
        if any(d < 0 for d in delta):
            raise ExactDivisionError(
                f"({f}) is not exactly divisible by ({g})"
            )
        c = ring.coeff(r_coeff * g_inv)
        quotient[delta] = c
        rem = rem - Polynomial.monomial(ring, delta, c) * g
    return Polynomial(ring, quotient)


def coefficients_in(f: Polynomial, var: str) -> list[Polynomial]:
    """Coefficients of f as a polynomial in `var`, ascending degree.

    The returned coefficients live over the same ring with the variable's
    exponent zeroed out.  Index d holds the coefficient of var^d.
    """
    i = f.ring.index(var)
    deg = f.degree_in(var)
    buckets: list[dict] = [dict() for _ in range(max(deg, 0) + 1)]
    for expo, c in f.terms.items():
        e = list(expo)
        d = e[i]
        e[i] = 0
        buckets[d][tuple(e)] = c
    return [Polynomial(f.ring, b) for b in buckets]
