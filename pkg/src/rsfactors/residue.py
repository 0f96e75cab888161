"""Residue rings Z/p^k: unit characters, the additive character, Gauss sums.

Characters of (Z/p^k)^x are built from the images of fixed generators: a
primitive root for odd p, and (-1, 5) for p = 2.  Gauss sums are computed by
direct summation with the unit group given total mass 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _kernels
from .scalars import CycScalar, root_of_unity

__all__ = [
    "ResidueRing",
    "FiniteChar",
    "FractionalPoint",
    "UnsupportedRing",
    "additive_psi",
    "enumerate_characters",
    "gauss_sum",
    "k0_index",
    "k0_index_bruteforce",
    "constant_c",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


class UnsupportedRing(ValueError):
    """The requested (p, k) or index case is outside the supported domain."""


@dataclass(frozen=True)
class ResidueRing:
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("level must be >= 1")

    @property
    def modulus(self) -> int:
        return self.p**self.k

    @property
    def unit_count(self) -> int:
        return self.p**self.k - self.p ** (self.k - 1)

    def units(self) -> list[int]:
        return [z for z in range(self.modulus) if z % self.p]

    def generators(self) -> list[tuple[int, int]]:
        """(generator, order) pairs whose powers give every unit exactly once."""
        p, k = self.p, self.k
        if p == 2:
            if k == 1:
                return []
            if k == 2:
                return [(3, 2)]
            return [(self.modulus - 1, 2), (5, 2 ** (k - 2))]
        return [(_primitive_root(p), self.unit_count)]


@lru_cache(maxsize=None)
def _primitive_root(p: int) -> int:
    """Smallest g generating (Z/p^k)^x for every k (odd p)."""
    factors = [d for d in range(2, p) if (p - 1) % d == 0 and is_prime(d)]
    for g in range(2, p * p):
        if g % p == 0:
            continue
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors) and pow(g, p - 1, p * p) != 1:
            return g
    raise AssertionError("no primitive root found")


@dataclass(frozen=True)
class FiniteChar:
    """A character of (Z/p^level)^x with values zeta_n^table[z].

    ``table[z]`` is -1 at non-units.  ``gen_images`` records the exponents
    (in zeta_n) of the ring's generators, which determine the character.
    """

    ring: ResidueRing
    n: int
    gen_images: tuple[int, ...]
    table: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_generator_images(cls, ring: ResidueRing, images: tuple[int, ...], n: int) -> "FiniteChar":
        gens = ring.generators()
        if len(images) != len(gens):
            raise ValueError("one image per generator required")
        table = [-1] * ring.modulus
        # walk the product of cyclic groups generated by gens
        elems = {1: 0}
        for (g, order), img in zip(gens, images):
            new = {}
            for base, e in elems.items():
                x = base
                for t in range(order):
                    new[x] = (e + t * img) % n
                    x = x * g % ring.modulus
            elems = new
        if len(elems) != ring.unit_count:
            raise AssertionError("generators do not span the unit group")
        for z, e in elems.items():
            table[z] = e
        return cls(ring, n, tuple(img % n for img in images), tuple(table))

    @classmethod
    def trivial(cls, p: int, level: int = 1) -> "FiniteChar":
        ring = ResidueRing(p, level)
        return cls.from_generator_images(ring, (0,) * len(ring.generators()), 1)

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def level(self) -> int:
        return self.ring.k

    def exponent(self, z: int) -> int:
        e = self.table[z % self.ring.modulus]
        if e < 0:
            raise ValueError(f"{z} is not a unit mod {self.ring.modulus}")
        return e

    def value(self, z: int) -> CycScalar:
        return root_of_unity(self.n, self.exponent(z))

    def is_trivial(self) -> bool:
        return all(e <= 0 for e in self.table)

    @property
    def conductor_exp(self) -> int:
        """0 if trivial, else the least c >= 1 with the character trivial on 1 + p^c."""
        if self.is_trivial():
            return 0
        p, mod = self.p, self.ring.modulus
        for c in range(1, self.level + 1):
            step = p**c
            if all(self.table[(1 + step * t) % mod] == 0 for t in range(mod // step)):
                return c
        return self.level

    def is_primitive(self) -> bool:
        return self.conductor_exp == self.level

    def lift(self, level: int) -> "FiniteChar":
        """The same character viewed on (Z/p^level)^x, level >= self.level."""
        if level < self.level:
            raise ValueError("can only lift to a higher level")
        if level == self.level:
            return self
        ring = ResidueRing(self.p, level)
        images = tuple(self.exponent(g) for g, _ in ring.generators())
        return FiniteChar.from_generator_images(ring, images, self.n)

    def __mul__(self, other: "FiniteChar") -> "FiniteChar":
        if self.p != other.p:
            raise ValueError("characters at different primes")
        level = max(self.level, other.level)
        a, b = self.lift(level), other.lift(level)
        n = math.lcm(a.n, b.n)
        images = tuple(
            (x * (n // a.n) + y * (n // b.n)) % n for x, y in zip(a.gen_images, b.gen_images)
        )
        return FiniteChar.from_generator_images(a.ring, images, n)

    def inverse(self) -> "FiniteChar":
        return FiniteChar.from_generator_images(self.ring, tuple(-e for e in self.gen_images), self.n)

    def same_character(self, other: "FiniteChar") -> bool:
        """Pointwise equality of values (after lifting to a common level)."""
        level = max(self.level, other.level)
        a, b = self.lift(level), other.lift(level)
        n = math.lcm(a.n, b.n)
        return all(
            (x < 0 and y < 0) or (x >= 0 and y >= 0 and x * (n // a.n) % n == y * (n // b.n) % n)
            for x, y in zip(a.table, b.table)
        )

    def label(self) -> str:
        return f"chi[p={self.p},k={self.level},n={self.n},images={list(self.gen_images)}]"


def enumerate_characters(ring: ResidueRing) -> list[FiniteChar]:
    """Every character of (Z/p^k)^x exactly once, trivial first."""
    if ring.p == 2 and ring.k > 3:
        raise UnsupportedRing(f"characters mod 2^{ring.k} are not supported (p = 2 needs k <= 3)")
    gens = ring.generators()
    if not gens:
        return [FiniteChar.from_generator_images(ring, (), 1)]
    n = math.lcm(*(order for _, order in gens))
    chars = []
    for idx in np.ndindex(*(order for _, order in gens)):
        images = tuple(j * (n // order) for j, (_, order) in zip(idx, gens))
        chars.append(FiniteChar.from_generator_images(ring, images, n))
    return chars


@dataclass(frozen=True)
class FractionalPoint:
    """x in Q with p-power denominator, taken modulo 1 (a point of p^-v / Z_p)."""

    p: int
    num: int
    v: int

    @classmethod
    def of(cls, x, p: int) -> "FractionalPoint":
        x = Fraction(x)
        den = x.denominator
        v = 0
        while den % p == 0:
            den //= p
            v += 1
        if den != 1:
            raise ValueError(f"{x} does not have a {p}-power denominator")
        mod = p**v
        return cls(p, x.numerator % mod, v)

    @classmethod
    def unit_times(cls, u: int, v: int, p: int) -> "FractionalPoint":
        """u * p^-v for a unit u (v may be negative; then the point is integral)."""
        if u % p == 0:
            raise ValueError(f"{u} is not a p-adic unit")
        return cls.of(Fraction(u, p**v) if v >= 0 else u * p ** (-v), p)

    def is_integral(self) -> bool:
        return self.v == 0

    def scaled(self, u: int) -> "FractionalPoint":
        return FractionalPoint.of(Fraction(self.num * u, self.p**self.v), self.p)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.p**self.v)


def additive_psi(x: FractionalPoint) -> CycScalar:
    """psi(x) = exp(2 pi i x) on p-power fractions; trivial exactly on Z_p."""
    return root_of_unity(x.p**x.v, x.num)


def gauss_sum(omega: FiniteChar, y: FractionalPoint) -> CycScalar:
    """Average of omega(z) psi(y z) over the units z (total unit mass 1)."""
    if omega.p != y.p:
        raise ValueError("character and point at different primes")
    p = omega.p
    level = max(omega.level, y.v, 1)
    chi = omega.lift(level)
    pv = p**y.v
    n = math.lcm(chi.n, pv)
    hist = _kernels.gauss_histogram(np.asarray(chi.table, dtype=np.int64), chi.n, y.num, pv, n)
    total = CycScalar.from_exponents(n, hist.tolist())
    return total / chi.ring.unit_count


def k0_index(m: int, p: int, f: int) -> int:
    """[GL_m(Z_p) : K_0(p^f)] = p^((f-1)(m-1)) (p^m - 1)/(p - 1)."""
    if m < 1 or f < 1:
        raise ValueError("k0_index needs m >= 1 and f >= 1")
    return p ** ((f - 1) * (m - 1)) * (p**m - 1) // (p - 1)


def k0_index_bruteforce(m: int, p: int, f: int = 1) -> int:
    """|GL_m(F_p)| / |{g : last row (0, ..., 0, *)}| by enumerating all matrices."""
    if not (1 <= m <= 3 and p in (2, 3) and f == 1):
        raise UnsupportedRing(f"brute-force index limited to m <= 3, p in {{2, 3}}, f = 1; got {(m, p, f)}")
    n_gl, n_k0 = _kernels.count_gl_and_k0(m, p)
    if n_gl % n_k0:
        raise AssertionError("subgroup order does not divide group order")
    return n_gl // n_k0


class ZeroGaussSum(ArithmeticError):
    """The Gauss sum defining the constant c vanished."""


def constant_c(omega: FiniteChar | None, c_exp: int, q_exp: int, m: int, p: int) -> CycScalar:
    """G(omega, psi, p^-c_exp) / [GL_m(Z_p) : K_0(p^q_exp)]."""
    if q_exp < 1:
        raise ValueError("constant c needs a ramified tau (conductor exponent >= 1)")
    if c_exp > q_exp:
        raise ValueError(f"central conductor exponent {c_exp} exceeds conductor exponent {q_exp}")
    if omega is None:
        omega = FiniteChar.trivial(p)
    if omega.p != p:
        raise ValueError("central character at a different prime")
    if (c_exp == 0) != omega.is_trivial():
        raise ValueError("central character must be trivial exactly when its conductor exponent is 0")
    g = gauss_sum(omega, FractionalPoint.of(Fraction(1, p**c_exp), p))
    if g.is_zero():
        raise ZeroGaussSum(f"Gauss sum vanished for {omega.label()} at p^-{c_exp}")
    return g / k0_index(m, p, q_exp)
