"""Polynomials, truncated series and rational functions in X = q^-s.

L-factors live here as :class:`XRational` values normalized so the denominator
has constant term 1, matching 1/L in C[X] and L -> 1 as s -> infinity.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import ONE, ZERO, CycScalar

__all__ = [
    "XPoly",
    "XSeries",
    "XRational",
    "NotPolynomialError",
    "lfactor_from_params",
    "naive_rs",
    "series_of",
    "divide_exact",
    "DEFAULT_TRUNC",
]

DEFAULT_TRUNC = 12


class XPoly:
    """Polynomial in X with CycScalar coefficients (index k holds the X^k coefficient)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [CycScalar.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "XPoly":
        return cls([c])

    @property
    def degree(self) -> float:
        """Degree, with ``float('-inf')`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> CycScalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            try:
                other = XPoly([other])
            except TypeError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "XPoly") -> "XPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self[k] + other[k] for k in range(n))

    def __neg__(self):
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + (-other)

    def __mul__(self, other) -> "XPoly":
        if not isinstance(other, XPoly):
            c = CycScalar.coerce(other)
            return XPoly(c * x for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "XPoly") -> tuple["XPoly", "XPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = len(other.coeffs)
        inv_lead = other.coeffs[-1].inverse()
        quot = [ZERO] * max(len(rem) - dv + 1, 0)
        for i in range(len(rem) - dv, -1, -1):
            c = rem[i + dv - 1] * inv_lead
            quot[i] = c
            if not c.is_zero():
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return XPoly(quot), XPoly(rem[: dv - 1])

    def monic(self) -> "XPoly":
        if self.is_zero():
            return self
        return self * self.coeffs[-1].inverse()

    def __call__(self, x) -> CycScalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"XPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if not mono:
                terms.append(f"({c})" if not c.is_rational() else str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"({c})*{mono}" if not c.is_rational() else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(a: XPoly, b: XPoly) -> XPoly:
    """Monic gcd (the zero polynomial only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    return a.monic()


class XSeries:
    """Power series in X known through X^trunc (inclusive)."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: Iterable, trunc: int):
        if trunc < 0:
            raise ValueError("truncation degree must be non-negative")
        cs = [CycScalar.coerce(c) for c in coeffs][: trunc + 1]
        cs += [ZERO] * (trunc + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.trunc = trunc

    def truncate(self, d: int) -> "XSeries":
        if d > self.trunc:
            raise ValueError(f"cannot extend a series known to X^{self.trunc} up to X^{d}")
        return XSeries(self.coeffs[: d + 1], d)

    def _align(self, other: "XSeries"):
        d = min(self.trunc, other.trunc)
        return d, self.coeffs[: d + 1], other.coeffs[: d + 1]

    def __add__(self, other: "XSeries") -> "XSeries":
        d, a, b = self._align(other)
        return XSeries([x + y for x, y in zip(a, b)], d)

    def __sub__(self, other: "XSeries") -> "XSeries":
        d, a, b = self._align(other)
        return XSeries([x - y for x, y in zip(a, b)], d)

    def __mul__(self, other: "XSeries") -> "XSeries":
        d, a, b = self._align(other)
        out = [ZERO] * (d + 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j in range(d + 1 - i):
                if not b[j].is_zero():
                    out[i + j] = out[i + j] + x * b[j]
        return XSeries(out, d)

    def __eq__(self, other):
        if not isinstance(other, XSeries):
            return NotImplemented
        _, a, b = self._align(other)
        return a == b

    def __hash__(self):
        return hash(self.coeffs)

    def first_difference(self, other: "XSeries") -> int | None:
        """Lowest degree where the two series differ, or None if they agree."""
        _, a, b = self._align(other)
        return next((k for k, (x, y) in enumerate(zip(a, b)) if x != y), None)

    def __repr__(self):
        return f"XSeries({[str(c) for c in self.coeffs]}, trunc={self.trunc})"


class XRational:
    """num/den in lowest terms with den(0) == 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, XPoly) else XPoly(num if isinstance(num, (list, tuple)) else [num])
        den = XPoly([ONE]) if den is None else (den if isinstance(den, XPoly) else XPoly(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = XPoly(), XPoly([ONE])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = divmod(num, g)[0], divmod(den, g)[0]
        c0 = den[0]
        if c0.is_zero():
            raise ValueError(f"denominator {den} vanishes at X = 0; no normalization with den(0) = 1")
        inv = c0.inverse()
        self.num, self.den = num * inv, den * inv

    @classmethod
    def one(cls) -> "XRational":
        return cls(XPoly([ONE]))

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __mul__(self, other: "XRational") -> "XRational":
        return XRational(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "XRational") -> "XRational":
        return XRational(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, XRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"XRational(({self.num}) / ({self.den}))"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


class NotPolynomialError(ArithmeticError):
    """An exact quotient expected to be a polynomial was not one."""

    def __init__(self, quotient: XRational):
        super().__init__(f"quotient is not a polynomial: {quotient}")
        self.quotient = quotient


def lfactor_from_params(params: Sequence) -> XRational:
    """1 / prod over non-zero a of (1 - a X)."""
    den = XPoly([ONE])
    for a in params:
        a = CycScalar.coerce(a)
        if not a.is_zero():
            den = den * XPoly([ONE, -a])
    return XRational(XPoly([ONE]), den)


def naive_rs(alpha: Sequence, gamma: Sequence) -> XRational:
    """prod_{i,j} (1 - alpha_i gamma_j X)^-1 over the non-zero products."""
    alpha = [CycScalar.coerce(a) for a in alpha]
    gamma = [CycScalar.coerce(g) for g in gamma]
    return lfactor_from_params([a * g for a in alpha for g in gamma])


def series_of(r: XRational, d: int) -> XSeries:
    """Maclaurin coefficients of num/den through X^d."""
    den = r.den
    if den[0].is_zero():
        raise ZeroDivisionError("denominator vanishes at X = 0")
    inv0 = den[0].inverse()
    out = []
    for k in range(d + 1):
        acc = r.num[k]
        for j in range(1, min(k, den.degree) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv0)
    return XSeries(out, d)


def divide_exact(a: XRational, b: XRational) -> XPoly:
    """The polynomial P with a = P * b; raises NotPolynomialError otherwise."""
    quot = a / b
    if not quot.is_polynomial():
        raise NotPolynomialError(quot)
    return quot.num
