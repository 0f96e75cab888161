import random
from fractions import Fraction

import pytest

from rsfactors import CycScalar, Partition, QGraded, naive_rs, series_of
from rsfactors.reps import RepDescriptor
from rsfactors.whittaker import (
    cauchy_sum,
    essential_whittaker_torus,
    modulus_exponent,
    modulus_exponent_closed,
    modulus_exponent_coords,
    zeta_torus_sum,
)


def test_modulus_examples():
    assert modulus_exponent(2, (1, 0)) == 1
    assert modulus_exponent(5, ()) == 0
    assert modulus_exponent(3, (2, 1, 0)) == 4
    with pytest.raises(ValueError):
        modulus_exponent(3, (1, 2))


def test_modulus_routes_small_exhaustive():
    from itertools import combinations_with_replacement

    for n in range(1, 5):
        for lam in combinations_with_replacement(range(4), n):
            lam = tuple(sorted(lam, reverse=True))
            assert modulus_exponent_coords(n, lam) == modulus_exponent_closed(n, lam)


def test_whittaker_identity_point():
    assert essential_whittaker_torus(3, (), [1, 2, 3], 3) == QGraded(1, 0, 3)


def test_whittaker_first_step():
    assert essential_whittaker_torus(2, (1, 0), [1, 2], 5) == QGraded(3, -1, 5)


def test_whittaker_support():
    w = essential_whittaker_torus(3, (1, 1, 1), [2, 3, 0], 3)
    assert w.coeff == 0
    assert essential_whittaker_torus(2, (0, 1), [1, 2], 3).coeff == 0


def test_zeta_sum_degree_zero():
    pi = RepDescriptor(2, (2, 3))
    tau = RepDescriptor(1, (5,))
    s = zeta_torus_sum(pi, tau, 0, 3)
    assert list(s.coeffs) == [1]


def test_zeta_sum_needs_smaller_tau():
    pi = RepDescriptor(2, (2, 3))
    with pytest.raises(ValueError):
        zeta_torus_sum(pi, pi, 3, 3)


def test_cauchy_single_variable():
    s = cauchy_sum([2], [3], 5)
    assert list(s.coeffs) == [6**k for k in range(6)]
    assert list(cauchy_sum([2, 3], [0, 0], 4).coeffs) == [1, 0, 0, 0, 0]


def _rand(rng, k, zero=False):
    out = [CycScalar(Fraction(rng.randint(1, 5) * rng.choice((-1, 1)), rng.randint(1, 4))) for _ in range(k)]
    if zero:
        out[-1] = CycScalar(0)
    return out


@pytest.mark.parametrize("seed", range(6))
def test_zeta_sum_matches_naive(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    m = rng.randint(1, n - 1)
    ramified = seed % 2 == 1
    pi = RepDescriptor(n, tuple(_rand(rng, n)))
    tau = RepDescriptor(m, tuple(_rand(rng, m, ramified)), 1 if ramified else 0)
    want = series_of(naive_rs(pi.params, tau.params), 8)
    assert zeta_torus_sum(pi, tau, 8, 3) == want


def test_cauchy_matches_naive_random(rng):
    for _ in range(5):
        a = _rand(rng, rng.randint(1, 4))
        g = _rand(rng, rng.randint(1, 4))
        assert cauchy_sum(a, g, 10) == series_of(naive_rs(a, g), 10)
