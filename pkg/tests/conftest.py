import random

import pytest

from multres import RingCtx, parse_ring
from multres.poly import Polynomial


@pytest.fixture
def rxy():
    return parse_ring("Q[x,y]")


@pytest.fixture
def rxyz():
    return parse_ring("Q[x,y,z]")


@pytest.fixture
def rxz():
    return parse_ring("Q[x,z]")


def random_poly(rng: random.Random, ring: RingCtx, max_degree=3, terms=3, allow_zero=False):
    out = Polynomial.zero(ring)
    for _ in range(rng.randint(0 if allow_zero else 1, terms)):
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        expo = [0] * ring.nvars
        for _ in range(rng.randint(0, max_degree)):
            expo[rng.randrange(ring.nvars)] += 1
        out = out + Polynomial.monomial(ring, expo, coeff)
    return out
