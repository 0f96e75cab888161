from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rsfactors import CycScalar, QGraded, qgraded_mul, root_of_unity, to_complex
from rsfactors.scalars import cyclotomic_poly

z = root_of_unity


def test_cube_roots_sum_to_minus_one():
    assert z(3) + z(3, 2) == -1


def test_zeta4_squared():
    assert z(4) ** 2 == -1


def test_sixth_root_is_one_plus_cube_root():
    assert z(6) == 1 + z(3)


@pytest.mark.parametrize("n", range(1, 25))
def test_full_turn(n):
    assert z(n) ** n == 1
    assert z(n, n) == 1


def test_canonical_order_descends():
    x = z(15, 3)
    assert x.order == 5
    assert x == z(5)
    assert hash(x) == hash(z(5))


def test_rational_equality_and_hash():
    assert CycScalar(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(CycScalar(3)) == hash(z(7) ** 7 * 3)
    assert (z(4) * z(4, 3)).is_rational()


def test_inverse_and_division():
    x = 1 + 2 * z(5) - z(5, 3) * Fraction(1, 3)
    assert x * x.inverse() == 1
    assert (x / x) == 1
    with pytest.raises(ZeroDivisionError):
        CycScalar(0).inverse()


def test_conjugate_is_complex_conjugate():
    x = Fraction(2, 3) + z(12, 5)
    assert abs(to_complex(x.conjugate(), 30) - mpmath.conj(to_complex(x, 30))) < mpmath.mpf(10) ** -25


def test_to_complex_matches_exp():
    with mpmath.workdps(40):
        want = mpmath.exp(2j * mpmath.pi * 3 / 7)
    assert abs(to_complex(z(7, 3), 30) - want) < mpmath.mpf(10) ** -28


def test_str_forms():
    assert str(z(3)) == "zeta(3)"
    assert str(Fraction(1, 2) + z(3)) == "1/2 + zeta(3)"
    assert str(-z(4)) == "-zeta(4)"
    assert str(CycScalar(0)) == "0"


def test_cyclotomic_poly_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_qgraded_collapse_and_mul():
    a = QGraded(2, 3, 3)
    b = QGraded(Fraction(1, 2), -1, 3)
    assert qgraded_mul(a, b).collapse() == 3
    with pytest.raises(Exception):
        a.collapse()
    with pytest.raises(Exception):
        a + b
    assert (a + QGraded(0, 0, 3)) == a


small = st.builds(
    lambda n, cs: CycScalar.from_exponents(n, [Fraction(c) for c in cs]),
    st.sampled_from([1, 3, 4, 5, 6, 8, 12]),
    st.lists(st.integers(-4, 4), min_size=1, max_size=12),
)


@settings(max_examples=60, deadline=None)
@given(small, small, small)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=40, deadline=None)
@given(small)
def test_complex_embedding_is_homomorphism(a):
    b = a * a + 1
    with mpmath.workdps(30):
        err = abs(to_complex(b, 30) - (to_complex(a, 30) ** 2 + 1))
    assert err < mpmath.mpf(10) ** -20
