from fractions import Fraction

import pytest

from rsfactors import XPoly, XRational, XSeries, divide_exact, lfactor_from_params, naive_rs, series_of
from rsfactors.lseries import NotPolynomialError, poly_gcd


def test_poly_arith_and_str():
    p = XPoly([1, Fraction(-1, 3)])
    assert str(p) == "1 - 1/3*X"
    assert p * XPoly([1, Fraction(1, 3)]) == XPoly([1, 0, Fraction(-1, 9)])
    q, r = divmod(XPoly([1, 0, -1]), XPoly([1, 1]))
    assert q == XPoly([1, -1]) and r.is_zero()
    assert XPoly().degree == float("-inf")


def test_gcd_is_monic():
    a = XPoly([1, 0, -1])
    b = XPoly([2, 2])
    assert poly_gcd(a, b) == XPoly([1, 1])


def test_rational_reduces():
    r = XRational(XPoly([1, 0, -1]), XPoly([1, 1]))
    assert r.is_polynomial
    assert r == XRational(XPoly([1, -1]))
    with pytest.raises(ValueError):
        XRational(XPoly([1]), XPoly([0, 1]))


def test_lfactor_skips_zero_parameters():
    assert lfactor_from_params([0, 0]) == XRational.one()
    assert lfactor_from_params([2]) == XRational(XPoly([1]), XPoly([1, -2]))


def test_geometric_series():
    s = series_of(lfactor_from_params([1]), 5)
    assert list(s.coeffs) == [1] * 6


def test_naive_rs_series():
    # (1-2X)^-1 (1-3X)^-1
    s = series_of(naive_rs([2, 3], [1]), 4)
    assert [int(str(c)) for c in s.coeffs] == [1, 5, 19, 65, 211]


def test_series_truncation_alignment():
    a = XSeries([1, 1, 1], 2)
    b = XSeries([1, 1, 1, 1], 3)
    assert (a + b).trunc == 2
    assert a.first_difference(b) is None
    assert a.first_difference(XSeries([1, 2], 2)) == 1


def test_divide_exact():
    num = XRational(XPoly([1]), XPoly([1, -1]) * XPoly([1, -2]))
    den = XRational(XPoly([1]), XPoly([1, -2]))
    assert divide_exact(den, num) == XPoly([1, -1])
    with pytest.raises(NotPolynomialError):
        divide_exact(num, den)
