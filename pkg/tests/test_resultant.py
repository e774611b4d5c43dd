"""Sylvester resultants checked against explicit determinant expansions."""

import random

import pytest

from multres import parse, parse_ring, resultant_bivariate
from multres.errors import ContractError
from multres.poly import Polynomial
from multres.resultant import sylvester_matrix

from conftest import random_poly


@pytest.fixture
def ring():
    return parse_ring("Q[x,y]")


def _det_cofactor(matrix, ring):
    """Reference determinant by cofactor expansion, for small matrices."""
    n = len(matrix)
    if n == 0:
        return Polynomial.constant(ring, 1)
    if n == 1:
        return matrix[0][0]
    total = Polynomial.zero(ring)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        piece = matrix[0][j] * _det_cofactor(minor, ring)
        total = total + piece if j % 2 == 0 else total - piece
    return total


def test_cusp_against_3x3_determinant(ring):
    f = parse("y^2 - x^3", ring)
    g = parse("2*y", ring)
    m = sylvester_matrix(f, g, "y")
    assert len(m) == 3
    assert resultant_bivariate(f, g, "y") == _det_cofactor(m, ring)
    assert resultant_bivariate(f, g, "y") == parse("-4*x^3", ring)


def test_linear_pair(ring):
    assert resultant_bivariate(
        parse("y - x", ring), parse("y + x", ring), "y"
    ) == parse("2*x", ring)


def test_constant_second_argument(ring):
    f = parse("y^2 - x^3", ring)
    assert resultant_bivariate(f, parse("1", ring), "y") == parse("1", ring)
    assert resultant_bivariate(f, parse("3", ring), "y") == parse("9", ring)


def test_zero_operand_rejected(ring):
    with pytest.raises(ContractError):
        resultant_bivariate(parse("0", ring), parse("y", ring), "y")


def test_bareiss_matches_cofactor_randomized(ring):
    rng = random.Random(17)
    for _ in range(15):
        f = random_poly(rng, ring, max_degree=3, terms=3)
        g = random_poly(rng, ring, max_degree=2, terms=2)
        if not f.uses("y") or not g.uses("y"):
            continue
        m = sylvester_matrix(f, g, "y")
        assert resultant_bivariate(f, g, "y") == _det_cofactor(m, ring)


def test_vanishes_iff_common_root(ring):
    # (y - x)(y + 1) and (y - x)(y - 2) share the factor y - x.
    f = parse("(y - x)*(y + 1)", ring)
    g = parse("(y - x)*(y - 2)", ring)
    assert resultant_bivariate(f, g, "y").is_zero()
    h = parse("(y - x - 1)*(y - 2)", ring)
    assert not resultant_bivariate(f, h, "y").is_zero()
