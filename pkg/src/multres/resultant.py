"""Sylvester resultants for bivariate elimination.

The sign convention is the raw Sylvester determinant with the f-coefficient
rows first, then the g rows.  Entries are polynomials in the surviving
variable; the determinant is computed with Bareiss's fraction-free scheme so
every intermediate division is exact.
"""

from __future__ import annotations

from .errors import ContractError
from .poly import Polynomial, coefficients_in, div_exact


def _det_bareiss(matrix: list[list[Polynomial]], ring) -> Polynomial:
    n = len(matrix)
    if n == 0:
        return Polynomial.constant(ring, 1)
    m = [row[:] for row in matrix]
    sign = 1
    prev = Polynomial.constant(ring, 1)
    for k in range(n - 1):
        if not m[k][k]:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k]), None)
            if pivot_row is None:
                return Polynomial.zero(ring)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = Polynomial.zero(ring)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_matrix(f: Polynomial, g: Polynomial, var: str) -> list[list[Polynomial]]:
    """Sylvester matrix of f and g with respect to `var` (f rows first).

    Coefficients appear in descending degree, each row shifted one column.
    """
    fc = coefficients_in(f, var)
    gc = coefficients_in(g, var)
    n, m = len(fc) - 1, len(gc) - 1
    ring = f.ring
    zero = Polynomial.zero(ring)
    size = n + m
    rows = []
    f_desc = fc[::-1]
    g_desc = gc[::-1]
    for shift in range(m):
        rows.append([zero] * shift + f_desc + [zero] * (size - shift - n - 1))
    for shift in range(n):
        rows.append([zero] * shift + g_desc + [zero] * (size - shift - m - 1))
    return rows


def resultant_bivariate(f: Polynomial, g: Polynomial, var: str) -> Polynomial:
    """Sylvester resultant eliminating `var` from two polynomials in a 2-variable ring."""
    if f.ring != g.ring:
        raise ContractError("resultant operands must share a ring")
    if f.ring.nvars != 2:
        raise ContractError("resultant_bivariate needs a 2-variable ring")
    if not f or not g:
        raise ContractError("resultant of the zero polynomial")
    f.ring.index(var)
    n = f.degree_in(var)
    m = g.degree_in(var)
    if n == 0 and m == 0:
        return Polynomial.constant(f.ring, 1)
    if m == 0:
        return g**n
    if n == 0:
        return f**m
    return _det_bareiss(sylvester_matrix(f, g, var), f.ring)
