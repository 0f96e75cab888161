"""Exact arithmetic in cyclotomic fields, plus formal half-integer powers of q.

A :class:`CycScalar` is an element of some Q(zeta_N), stored in the power basis
``1, z, ..., z^(phi(N)-1)`` modulo the N-th cyclotomic polynomial, at the
smallest N whose field contains it.  Equality of canonical forms is equality of
numbers, which is what every identity check in this package relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

import mpmath

__all__ = [
    "CycScalar",
    "QGraded",
    "root_of_unity",
    "to_complex",
    "qgraded_mul",
    "cyclotomic_poly",
    "ZERO",
    "ONE",
]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_int_div(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_int_div(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]  # den is monic
        if c:
            out[i - dn] = c
            for j, dj in enumerate(den):
                num[i - dn + j] -= c * dj
    assert not any(num[:dn]), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce_mod_cyclotomic(n: int, vec: list) -> list:
    """Fold ``vec`` modulo z^n - 1, then reduce modulo Phi_n; returns phi(n) entries."""
    folded = [Fraction(0)] * n
    for k, c in enumerate(vec):
        if c:
            folded[k % n] += c
    cyc = cyclotomic_poly(n)
    deg = len(cyc) - 1
    for i in range(n - 1, deg - 1, -1):
        c = folded[i]
        if c:
            base = i - deg
            for j in range(deg):
                if cyc[j]:
                    folded[base + j] -= c * cyc[j]
            folded[i] = Fraction(0)
    return folded[:deg]


def _bezout(a: int, b: int) -> tuple[int, int]:
    # returns x, y with a*x + b*y == 1 for coprime a, b
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    return old_s, old_t


def _trace_down(n: int, p: int, vec: Sequence[Fraction]) -> list[Fraction]:
    """Average over Gal(Q(zeta_n)/Q(zeta_{n/p})), expressed in powers of zeta_{n/p}."""
    m = n // p
    out = [Fraction(0)] * m
    if m % p == 0:
        for k, c in enumerate(vec):
            if c and k % p == 0:
                out[(k // p) % m] += c
        return out
    # n = m*p with gcd(m, p) = 1, zeta_n = zeta_m^x * zeta_p^y where x*p + y*m = 1
    x, _ = _bezout(p, m)
    scale = Fraction(-1, p - 1)
    for k, c in enumerate(vec):
        if c:
            out[(k * x) % m] += c if k % p == 0 else c * scale
    return out


def _canonical(n: int, vec: list) -> tuple[int, tuple[Fraction, ...]]:
    red = _reduce_mod_cyclotomic(n, vec)
    while n > 1:
        for p in _prime_factors(n):
            down = _trace_down(n, p, red)
            lifted = [Fraction(0)] * n
            for k, c in enumerate(down):
                lifted[k * p] = c
            if _reduce_mod_cyclotomic(n, lifted) == red:
                n //= p
                red = _reduce_mod_cyclotomic(n, down)
                break
        else:
            break
    return n, tuple(red)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class CycScalar:
    """Exact element of a cyclotomic field Q(zeta_N).

    Construct rationals with ``CycScalar(3)`` or ``CycScalar(Fraction(1, 3))``
    and roots of unity with :func:`root_of_unity`.  Instances are immutable and
    hashable; arithmetic between different orders happens in Q(zeta_lcm).
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, value=0):
        if isinstance(value, CycScalar):
            self.order, self.coeffs = value.order, value.coeffs
        else:
            self.order = 1
            self.coeffs = (_as_fraction(value),)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "CycScalar":
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def from_exponents(cls, order: int, coeffs: Iterable) -> "CycScalar":
        """Build ``sum_k coeffs[k] * zeta_order^k`` (any length, folded mod order)."""
        if order < 1:
            raise ValueError("order must be positive")
        vec = [_as_fraction(c) for c in coeffs]
        if order == 1:
            return cls._raw(1, (sum(vec, Fraction(0)),))
        return cls._raw(*_canonical(order, vec))

    @classmethod
    def coerce(cls, x) -> "CycScalar":
        return x if isinstance(x, CycScalar) else cls(x)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.order == 1 and not self.coeffs[0]

    def is_rational(self) -> bool:
        return self.order == 1

    def to_fraction(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, n: int) -> list[Fraction]:
        step = n // self.order
        vec = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            vec[k * step] = c
        return vec

    def __add__(self, other):
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return CycScalar._raw(1, (self.coeffs[0] + other.coeffs[0],))
        n = math.lcm(self.order, other.order)
        a, b = self._lift(n), other._lift(n)
        return CycScalar._raw(*_canonical(n, [x + y for x, y in zip(a, b)]))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._raw(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return CycScalar.coerce(other) + (-self)

    def __mul__(self, other):
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return CycScalar._raw(1, (self.coeffs[0] * other.coeffs[0],))
        if self.order == 1 or other.order == 1:
            r, x = (self, other) if self.order == 1 else (other, self)
            c = r.coeffs[0]
            if not c:
                return ZERO
            return CycScalar._raw(x.order, tuple(c * v for v in x.coeffs))
        n = math.lcm(self.order, other.order)
        sa, sb = n // self.order, n // other.order
        vec = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        vec[(i * sa + j * sb) % n] += a * b
        return CycScalar._raw(*_canonical(n, vec))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.order == 1:
            return CycScalar._raw(1, (1 / self.coeffs[0],))
        # s * a + t * Phi = 1 over Q[z], so s(zeta) is the inverse
        s = _poly_inverse_mod(list(self.coeffs), [Fraction(c) for c in cyclotomic_poly(self.order)])
        return CycScalar._raw(*_canonical(self.order, s))

    def __truediv__(self, other):
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        acc, base = ONE, self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def conjugate(self) -> "CycScalar":
        """Complex conjugation (zeta -> zeta^-1)."""
        if self.order == 1:
            return self
        n = self.order
        vec = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            vec[(-k) % n] = c
        return CycScalar._raw(*_canonical(n, vec))

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.order == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.order == 1 else hash((self.order, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"CycScalar({self})"

    def __str__(self):
        if self.order == 1:
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                z = f"zeta({self.order})" + (f"^{k}" if k > 1 else "")
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    def strip(p):
        while p and not p[-1]:
            p.pop()
        return p

    def divmod_(u, v):
        u = list(u)
        q = [Fraction(0)] * max(len(u) - len(v) + 1, 1)
        lead = v[-1]
        for i in range(len(u) - len(v), -1, -1):
            c = u[i + len(v) - 1] / lead
            q[i] = c
            if c:
                for j, vj in enumerate(v):
                    u[i + j] -= c * vj
        return strip(q), strip(u[: len(v) - 1])

    def sub(u, v):
        out = [Fraction(0)] * max(len(u), len(v))
        for i, c in enumerate(u):
            out[i] += c
        for i, c in enumerate(v):
            out[i] -= c
        return strip(out)

    def mul(u, v):
        if not u or not v:
            return []
        out = [Fraction(0)] * (len(u) + len(v) - 1)
        for i, x in enumerate(u):
            for j, y in enumerate(v):
                out[i + j] += x * y
        return strip(out)

    r0, r1 = strip(list(m)), strip(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    return [c / r1[0] for c in s1]


ZERO = CycScalar(0)
ONE = CycScalar(1)


def root_of_unity(n: int, k: int = 1) -> CycScalar:
    """zeta_n^k = exp(2*pi*i*k/n) in canonical form."""
    if n < 1:
        raise ValueError("root_of_unity needs n >= 1")
    vec = [Fraction(0)] * n
    vec[k % n] = Fraction(1)
    return CycScalar.from_exponents(n, vec)


def to_complex(x, precision: int = 15) -> mpmath.mpc:
    """Numerical value under zeta_N -> exp(2 pi i / N), accurate to 10^-precision."""
    x = CycScalar.coerce(x)
    with mpmath.workdps(precision + 10):
        acc = mpmath.mpc(0)
        for k, c in enumerate(x.coeffs):
            if c:
                acc += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * k) / x.order)
        return +acc


@dataclass(frozen=True)
class QGraded:
    """``coeff * q^(halfq/2)`` with the half-integer power of q kept formal."""

    coeff: CycScalar
    halfq: int
    q: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", CycScalar.coerce(self.coeff))
        if self.q < 2:
            raise ValueError("q must be a prime power >= 2")

    def __mul__(self, other: "QGraded") -> "QGraded":
        return qgraded_mul(self, other)

    def __add__(self, other: "QGraded") -> "QGraded":
        if self.q != other.q:
            raise ValueError("QGraded values over different q")
        if self.coeff.is_zero():
            return other
        if other.coeff.is_zero():
            return self
        if self.halfq != other.halfq:
            raise ValueError(f"cannot add q-grades {self.halfq}/2 and {other.halfq}/2")
        return QGraded(self.coeff + other.coeff, self.halfq, self.q)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def collapse(self) -> CycScalar:
        """The value as a CycScalar; only defined for an integral power of q."""
        if self.halfq % 2:
            raise ValueError(f"odd q-grade {self.halfq}/2 does not collapse to a scalar")
        return self.coeff * Fraction(self.q) ** (self.halfq // 2)


def qgraded_mul(a: QGraded, b: QGraded) -> QGraded:
    if a.q != b.q:
        raise ValueError("QGraded values over different q")
    return QGraded(a.coeff * b.coeff, a.halfq + b.halfq, a.q)
