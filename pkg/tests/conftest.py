import random
from fractions import Fraction

import pytest

from rsfactors import CycScalar


@pytest.fixture
def rng():
    return random.Random(20240611)


def rand_rational(rng, lo=-6, hi=6, den=5):
    return CycScalar(Fraction(rng.randint(lo, hi), rng.randint(1, den)))
