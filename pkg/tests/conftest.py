import random

import pytest

from simpade import Poly, PolyMatrix, PrimeField, validate_instance

GF2 = PrimeField(2)

# the running GF(2) example: three series modulo x^5, bounds (5, 3, 4, 5)
EX1_S = [[1, 0, 1, 0, 1], [1, 0, 0, 0, 1], [1, 0, 0, 1, 1]]
EX1_G = [[0, 0, 0, 0, 0, 1]] * 3
EX1_N = (5, 3, 4, 5)

# its known solution basis rows (lambda | numerators)
EX1_BASIS_ROWS = [
    [[1, 0, 0, 0, 1], [1, 0, 1], [1], [1, 0, 0, 1]],
    [[0, 1, 0, 1], [0, 1], [0, 1, 0, 1], [0, 1, 0, 1, 1]],
]

# canonical order-5 approximant basis of (1, S1, S2, S3)^T under shift N
EX1_DUAL_G = [
    [[0, 1], [], [0, 1], []],
    [[1], [1, 0, 1], [], []],
    [[], [1], [1, 0, 1], []],
    [[], [0, 1], [1, 1], [1]],
]

# intersection basis of the split subproblems, r-Popov under (-5,-1,-1,-3,-2)
SPLIT_G = [
    [[0] * 8 + [1], [], [], [], []],
    [[1, 1, 0, 1], [1, 0, 0, 0, 1], [1], [], [1]],
    [[1, 1, 1, 1], [1], [1, 1], [1], [1]],
    [[1, 1, 0, 1, 1], [1], [1], [0, 0, 1], [1]],
    [[1, 0, 0, 0, 1], [1], [], [1, 1], [1, 1]],
]
SPLIT_SHIFT = (-5, -1, -1, -3, -2)


@pytest.fixture
def gf2():
    return GF2


@pytest.fixture
def ex1_instance():
    return validate_instance(2, EX1_S, EX1_G, EX1_N)


@pytest.fixture
def ex1_basis():
    return PolyMatrix.from_coeff_lists(GF2, EX1_BASIS_ROWS)


@pytest.fixture
def ex1_dual_g():
    return PolyMatrix.from_coeff_lists(GF2, EX1_DUAL_G)


@pytest.fixture
def split_g():
    return PolyMatrix.from_coeff_lists(GF2, SPLIT_G)


def random_poly(rng, field, max_deg, monic=False):
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randrange(field.p) for _ in range(deg)]
    coeffs.append(rng.randrange(1, field.p) if monic is False
                  else 1)
    return Poly(field, coeffs)


def random_matrix(rng, field, n, m, max_len):
    return PolyMatrix(field, [[Poly(field,
                                    [rng.randrange(field.p)
                                     for _ in range(rng.randint(0, max_len))])
                               for _ in range(m)] for _ in range(n)])


def random_instance(rng, p, n, min_deg=2, max_deg=12, uniform=False):
    field = PrimeField(p)
    if uniform:
        d = rng.randint(min_deg, max_deg)
        moduli = [Poly(field, [0] * d + [1])] * n
    else:
        moduli = []
        for _ in range(n):
            dg = rng.randint(min_deg, max_deg)
            moduli.append(Poly(field, [rng.randrange(p) for _ in range(dg)]
                           + [rng.randrange(1, p)]))
    series = [Poly(field, [rng.randrange(p) for _ in range(int(g.degree))])
              for g in moduli]
    max_dg = max(int(g.degree) for g in moduli)
    n0 = rng.randint(1, max_dg)
    bounds = (n0,) + tuple(rng.randint(0, int(g.degree)) for g in moduli)
    return validate_instance(p, series, moduli, bounds)


def random_unimodular(rng, field, n, ops=20):
    """Product of random elementary row operations applied to the identity."""
    rows = [list(r) for r in PolyMatrix.identity(field, n).rows]
    for _ in range(ops):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            q = Poly(field, [rng.randrange(field.p)
                             for _ in range(rng.randint(0, 3))])
            rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
        elif kind == 1:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            c = rng.randrange(1, field.p)
            rows[i] = [c * a for a in rows[i]]
    return PolyMatrix(field, rows)
