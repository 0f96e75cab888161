from fractions import Fraction

import mpmath
import pytest

from rsfactors import root_of_unity, to_complex
from rsfactors.residue import (
    FiniteChar,
    FractionalPoint,
    ResidueRing,
    UnsupportedRing,
    ZeroGaussSum,
    additive_psi,
    constant_c,
    enumerate_characters,
    gauss_sum,
    k0_index,
    k0_index_bruteforce,
)

z3 = root_of_unity(3)


def quad3():
    (chi,) = [c for c in enumerate_characters(ResidueRing(3, 1)) if not c.is_trivial()]
    return chi


def test_psi_values():
    assert additive_psi(FractionalPoint.of(0, 3)) == 1
    assert additive_psi(FractionalPoint.of(Fraction(1, 3), 3)) == z3
    assert additive_psi(FractionalPoint.of(Fraction(5, 4), 2)) == root_of_unity(4)


@pytest.mark.parametrize("p,k,count", [(3, 1, 2), (5, 1, 4), (2, 3, 4), (2, 2, 2), (2, 1, 1), (3, 2, 6), (5, 2, 20)])
def test_character_counts(p, k, count):
    chars = enumerate_characters(ResidueRing(p, k))
    assert len(chars) == count
    assert chars[0].is_trivial()


def test_character_group_law():
    ring = ResidueRing(5, 2)
    chars = enumerate_characters(ring)
    for a in chars[:6]:
        for b in chars[:6]:
            ab = a * b
            for u in ring.units()[:8]:
                assert ab.value(u) == a.value(u) * b.value(u)
        assert (a * a.inverse()).is_trivial()


def test_conductors_mod_8():
    conds = sorted(c.conductor_exp for c in enumerate_characters(ResidueRing(2, 3)))
    assert conds == [0, 2, 3, 3]


def test_unsupported_ring():
    with pytest.raises(UnsupportedRing, match="k <= 3"):
        enumerate_characters(ResidueRing(2, 4))
    with pytest.raises(ValueError):
        ResidueRing(4, 1)
    with pytest.raises(UnsupportedRing):
        k0_index_bruteforce(2, 5, 1)


def test_gauss_trivial_integral():
    assert gauss_sum(FiniteChar.trivial(3), FractionalPoint.of(1, 3)) == 1


def test_gauss_quadratic_mod_3():
    chi = quad3()
    assert gauss_sum(chi, FractionalPoint.of(1, 3)) == 0
    g = gauss_sum(chi, FractionalPoint.of(Fraction(1, 3), 3))
    assert g == (z3 - z3 * z3) / 2
    assert abs(abs(to_complex(g, 30)) - mpmath.sqrt(3) / 2) < mpmath.mpf(10) ** -25


def test_to_complex_spec_values():
    assert abs(to_complex(root_of_unity(4), 20) - 1j) < 1e-10
    assert abs(to_complex(z3 - z3 * z3, 20) - mpmath.mpc(0, mpmath.sqrt(3))) < 1e-9


@pytest.mark.parametrize("m,p,f,want", [(2, 2, 1, 3), (2, 3, 1, 4), (3, 2, 1, 7), (3, 3, 1, 13)])
def test_index_bruteforce(m, p, f, want):
    assert k0_index_bruteforce(m, p, f) == want
    assert k0_index(m, p, f) == want


def test_index_formula():
    assert k0_index(1, 7, 3) == 1
    assert k0_index(3, 2, 2) == 28
    with pytest.raises(UnsupportedRing):
        k0_index_bruteforce(4, 2, 1)


def test_constant_c_examples():
    chi = quad3()
    assert constant_c(None, 0, 1, 2, 3) == Fraction(1, 4)
    assert constant_c(chi, 1, 1, 2, 3) == (z3 - z3 * z3) / 8
    assert constant_c(chi, 1, 1, 1, 3) == (z3 - z3 * z3) / 2


def test_constant_c_non_primitive_refused():
    chi = quad3().lift(2)
    with pytest.raises(ZeroGaussSum):
        constant_c(chi, 2, 2, 1, 3)
