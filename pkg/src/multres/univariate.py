"""Univariate helpers over Q: gcd, rational roots, derivative multiplicities.

A univariate polynomial is a list of Fractions, index = degree, with no
trailing zeros (the zero polynomial is the empty list).  These back the
resultant-based plane-curve solving and the Zariski cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import ContractError
from .poly import Polynomial


def trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def degree(u: list[Fraction]) -> int:
    return len(u) - 1


def is_constant(u: list[Fraction]) -> bool:
    return len(u) <= 1


def eval_at(u: list[Fraction], x: Fraction) -> Fraction:
    total = Fraction(0)
    for c in reversed(u):
        total = total * x + c
    return total


def derivative(u: list[Fraction]) -> list[Fraction]:
    return trim([c * k for k, c in enumerate(u)][1:])


def monic(u: list[Fraction]) -> list[Fraction]:
    if not u:
        return u
    lead = u[-1]
    return [c / lead for c in u]


def divmod_uni(a: list[Fraction], b: list[Fraction]):
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        factor = rem[-1] / b[-1]
        q[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        trim(rem)
    return trim(q), rem


def gcd_uni(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd by the Euclidean algorithm."""
    a, b = list(a), list(b)
    while b:
        _, r = divmod_uni(a, b)
        a, b = b, r
    return monic(a)


def gcd_many(polys) -> list[Fraction]:
    acc: list[Fraction] = []
    for u in polys:
        acc = gcd_uni(acc, u)
        if is_constant(acc) and acc:
            return acc
    return acc


def to_integer(u: list[Fraction]) -> list[int]:
    """Scale to a primitive integer polynomial (same roots)."""
    if not u:
        return []
    den = 1
    for c in u:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in u]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
    return [c // g for c in ints] if g else ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rational_roots(u: list[Fraction]):
    """All rational roots with multiplicities, plus the degree left unexplained.

    Returns (roots, leftover_degree) where roots is a sorted list of
    (root, multiplicity) and leftover_degree > 0 means irrational or complex
    roots remain.
    """
    u = trim(list(u))
    if not u:
        raise ContractError("the zero polynomial has every root")
    zero_mult = 0
    while u and u[0] == 0:
        u = u[1:]
        zero_mult += 1
    roots: dict[Fraction, int] = {}
    if zero_mult:
        roots[Fraction(0)] = zero_mult
    ints = to_integer(u)
    if len(ints) > 1:
        candidates = set()
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                candidates.add(Fraction(p, q))
                candidates.add(Fraction(-p, q))
        for cand in sorted(candidates):
            while len(u) > 1 and eval_at(u, cand) == 0:
                u, rem = divmod_uni(u, [-cand, Fraction(1)])
                assert not rem
                roots[cand] = roots.get(cand, 0) + 1
    leftover = degree(u) if len(u) > 1 else 0
    return sorted(roots.items()), leftover


def root_multiplicity_by_derivatives(u: list[Fraction], x: Fraction) -> int:
    """Number of consecutive vanishing derivatives at x, starting from u itself.

    Independent of the division-based root extraction, so the two can
    cross-check each other.
    """
    mult = 0
    current = list(u)
    while current and eval_at(current, x) == 0:
        mult += 1
        current = derivative(current)
    return mult


def from_poly(f: Polynomial, var: str) -> list[Fraction]:
    """Coefficient list of a polynomial that only uses `var`."""
    if f.ring.characteristic != 0:
        raise ContractError("univariate helpers work over Q")
    i = f.ring.index(var)
    out = [Fraction(0)] * (max(f.degree_in(var), 0) + 1)
    for expo, c in f.terms.items():
        if any(e and j != i for j, e in enumerate(expo)):
            raise ContractError(f"polynomial uses variables other than {var!r}")
        out[expo[i]] = c
    return trim(out)


def to_poly(u: list[Fraction], ring, var: str) -> Polynomial:
    i = ring.index(var)
    terms = {}
    for d, c in enumerate(u):
        if c:
            e = [0] * ring.nvars
            e[i] = d
            terms[tuple(e)] = c
    return Polynomial(ring, terms)
