from fractions import Fraction

import pytest

from rsfactors import XPoly, XRational, lfactor_from_params
from rsfactors.residue import ResidueRing, enumerate_characters
from rsfactors.reps import (
    boxtimes,
    boxtimes_esi,
    correction_polynomial,
    langlands_sum,
    make_character,
    naive_rs_lfactor,
    sigma_b,
    standard_lfactor,
    supercuspidal,
    twist_unramified,
)

Q = 3
third = Fraction(1, 3)


def ram_chars(p=3, c=1):
    return [x for x in enumerate_characters(ResidueRing(p, c)) if x.conductor_exp == c]


def test_make_character():
    chi = make_character(1)
    assert chi.params == (1,) and chi.cond_exp == 0
    r = make_character(5, ram_chars()[0])
    assert r.params == (0,) and r.cond_exp == 1
    assert make_character(third).params == (third,)
    with pytest.raises(ValueError):
        make_character(0)


def test_langlands_sum():
    a = sigma_b(make_character(2), 2, Q)
    s = langlands_sum(a, make_character(1))
    assert s.degree == 3
    assert sorted(map(str, s.params)) == sorted(map(str, a.params + (1,)))


def test_sigma_b():
    s = sigma_b(make_character(2), 2, Q)
    assert s.degree == 2 and s.params == (Fraction(2, 3), 0)
    assert s.cond_exp == 1
    sc = supercuspidal(2, 1)
    assert all(x == 0 for x in sigma_b(sc, 3, Q).params)
    assert sigma_b(sc, 3, Q).degree == 6
    chi = make_character(2)
    assert sigma_b(chi, 1, Q) is chi
    with pytest.raises(ValueError):
        sigma_b(chi, 0, Q)


def test_twist_unramified():
    s = sigma_b(make_character(6), 2, Q)
    assert twist_unramified(s, 1) == s
    assert twist_unramified(s, third).params == (Fraction(2, 3), 0)
    with pytest.raises(ValueError):
        twist_unramified(s, 0)


@pytest.mark.parametrize("u,v", [(1, 1), (2, third), (Fraction(-1, 2), 5)])
def test_sigma2_sigma2(u, v):
    pi = sigma_b(make_character(u), 2, Q)
    tau = sigma_b(make_character(v), 2, Q)
    uv = Fraction(u) * Fraction(v)
    want = lfactor_from_params([uv / 3, uv / 9])
    assert boxtimes_esi(pi, tau, Q) == want
    assert naive_rs_lfactor(pi, tau) == lfactor_from_params([uv / 9])
    assert correction_polynomial(pi, tau, Q) == XPoly([1, -uv / 3])


def test_boxtimes_m_greater_than_n():
    u, v = 2, 5
    got = boxtimes_esi(make_character(u), sigma_b(make_character(v), 2, Q), Q)
    assert got == lfactor_from_params([Fraction(u * v, 3)])


def test_supercuspidal_factor_trivial():
    sc = supercuspidal(2, 2)
    tau = sigma_b(make_character(1), 2, Q)
    assert boxtimes(sc, tau, Q) == XRational.one()
    assert correction_polynomial(sc, tau, Q) == XPoly([1])


def test_unramified_characters_give_trivial_p():
    a = langlands_sum(make_character(2), make_character(third))
    b = langlands_sum(make_character(5), make_character(1))
    assert correction_polynomial(a, b, Q) == XPoly([1])


def test_ramified_tau_against_unmatched_pi():
    chi = make_character(1, ram_chars()[0])
    pi = sigma_b(make_character(2), 2, Q)
    assert naive_rs_lfactor(pi, chi) == XRational.one()
    assert correction_polynomial(pi, chi, Q) == XPoly([1])


def test_ramified_pair_with_unramified_product():
    # chi ramified, chi^-1 ramified: naive factor 1, genuine factor not 1,
    # so the correction is 1 / L(s, chi chi^-1) rather than 1.
    w = ram_chars()[0]
    chi = make_character(2, w)
    chi_inv = make_character(1, w.inverse())
    assert naive_rs_lfactor(chi, chi_inv) == XRational.one()
    assert boxtimes(chi, chi_inv, Q) == lfactor_from_params([2])
    assert correction_polynomial(chi, chi_inv, Q) == XPoly([1, -2])


def test_standard_lfactor_of_segment():
    s = sigma_b(make_character(3), 3, Q)
    assert standard_lfactor(s) == lfactor_from_params([Fraction(1, 3)])
