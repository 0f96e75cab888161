"""Descriptors of generic representations and their two Rankin-Selberg factors.

A :class:`RepDescriptor` records degree, Langlands parameters (padded with zeros
to the degree), conductor exponent and central-character data.  Descriptors
built by :func:`make_character`, :func:`supercuspidal`, :func:`sigma_b` and
:func:`langlands_sum` also remember their classification data, which is what
:func:`boxtimes_esi` and :func:`correction_polynomial` consume.

Modeling conventions:

* a supercuspidal of degree > 1 is represented by all-zero parameters, and its
  twists by characters are assumed to keep trivial L-factor;
* for two segments over characters mu, nu the genuine factor is
  ``prod_{j < min(b, b')} L(s + b + b' - 2 - j, mu nu)``, which is 1 when mu nu
  is ramified.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .lseries import XPoly, XRational, divide_exact, lfactor_from_params, naive_rs
from .residue import FiniteChar
from .scalars import ONE, ZERO, CycScalar

__all__ = [
    "CentralChar",
    "RepDescriptor",
    "UnsupportedCase",
    "LemmaViolation",
    "make_character",
    "supercuspidal",
    "sigma_b",
    "langlands_sum",
    "twist_unramified",
    "components",
    "esi_view",
    "boxtimes_esi",
    "boxtimes",
    "naive_rs_lfactor",
    "standard_lfactor",
    "correction_polynomial",
]


class UnsupportedCase(ValueError):
    """The descriptor does not carry the classification data an operation needs."""


class LemmaViolation(ArithmeticError):
    """naive / genuine factor was not a polynomial with constant term 1."""


@dataclass(frozen=True)
class CentralChar:
    cond_exp: int = 0
    finite: FiniteChar | None = None
    unram_value: CycScalar = ONE

    def __post_init__(self):
        object.__setattr__(self, "unram_value", CycScalar.coerce(self.unram_value))
        if self.finite is not None and self.finite.is_trivial():
            object.__setattr__(self, "finite", None)
        if self.finite is None:
            if self.cond_exp != 0:
                raise ValueError("ramified central character needs its finite part")
        elif self.cond_exp != self.finite.conductor_exp:
            raise ValueError(
                f"central conductor exponent {self.cond_exp} does not match "
                f"the finite part's {self.finite.conductor_exp}"
            )

    @classmethod
    def from_finite(cls, finite: FiniteChar | None, unram_value=ONE) -> "CentralChar":
        cond = 0 if finite is None else finite.conductor_exp
        return cls(cond, finite, unram_value)

    def __mul__(self, other: "CentralChar") -> "CentralChar":
        if self.finite is None:
            fin = other.finite
        elif other.finite is None:
            fin = self.finite
        else:
            fin = self.finite * other.finite
        return CentralChar.from_finite(fin, self.unram_value * other.unram_value)

    def power(self, k: int) -> "CentralChar":
        out = CentralChar()
        for _ in range(k):
            out = out * self
        return out


@dataclass(frozen=True)
class RepDescriptor:
    degree: int
    params: tuple[CycScalar, ...]
    cond_exp: int = 0
    central: CentralChar = field(default_factory=CentralChar)
    kind: str = "generic"
    segment: tuple[int, "RepDescriptor"] | None = field(default=None, compare=False)
    parts: tuple["RepDescriptor", ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(CycScalar.coerce(a) for a in self.params))
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if len(self.params) != self.degree:
            raise ValueError(f"{len(self.params)} parameters for degree {self.degree}")
        if self.cond_exp < 0:
            raise ValueError("conductor exponent must be non-negative")
        if self.cond_exp == 0 and any(a.is_zero() for a in self.params):
            raise ValueError("an unramified (conductor exponent 0) descriptor needs non-zero parameters")
        if self.central.cond_exp > self.cond_exp:
            raise ValueError(
                f"central conductor exponent {self.central.cond_exp} exceeds conductor exponent {self.cond_exp}"
            )

    @property
    def is_ramified(self) -> bool:
        return self.cond_exp > 0

    def describe(self) -> str:
        if self.kind == "segment":
            b, eta = self.segment
            return f"sigma_{b}({eta.describe()})"
        if self.kind == "sum":
            return " [+] ".join(p.describe() for p in self.parts)
        if self.kind == "character":
            fin = self.central.finite
            tag = "unram" if fin is None else f"ram{fin.conductor_exp}{list(fin.gen_images)}"
            return f"chi({tag},{self.central.unram_value})"
        if self.kind == "supercuspidal":
            return f"sc{self.degree}(c={self.cond_exp})"
        return f"rep{self.degree}({', '.join(map(str, self.params))})"


def make_character(value, finite: FiniteChar | None = None) -> RepDescriptor:
    """Quasi-character with chi(varpi) = value and restriction ``finite`` to units."""
    value = CycScalar.coerce(value)
    if value.is_zero():
        raise ValueError("a quasi-character takes a non-zero value at the uniformizer")
    central = CentralChar.from_finite(finite, value)
    if central.finite is None:
        return RepDescriptor(1, (value,), 0, central, kind="character")
    return RepDescriptor(1, (ZERO,), central.cond_exp, central, kind="character")


def supercuspidal(degree: int, cond_exp: int, central: CentralChar | None = None) -> RepDescriptor:
    """Stand-in for a supercuspidal of GL_degree, degree >= 2 (trivial L-factor)."""
    if degree < 2:
        raise ValueError("use make_character for degree 1")
    if cond_exp < 1:
        raise ValueError("a supercuspidal of degree >= 2 is ramified")
    return RepDescriptor(degree, (ZERO,) * degree, cond_exp, central or CentralChar(), kind="supercuspidal")


def _default_segment_conductor(eta: RepDescriptor, b: int) -> int:
    if eta.kind == "character" and eta.cond_exp == 0:
        return b - 1
    return b * eta.cond_exp


def sigma_b(
    eta: RepDescriptor,
    b: int,
    q: int,
    cond_exp: int | None = None,
    central: CentralChar | None = None,
) -> RepDescriptor:
    """The essentially square-integrable sigma_b(eta); L(s, sigma_b(eta)) = L(s + b - 1, eta).

    ``cond_exp`` and ``central`` may be given explicitly.  Left out, the
    conductor follows b - 1 (unramified character) or b * a(eta) otherwise, and
    the central data is eta's raised to the b-th power without any |.|-shift.
    """
    if b < 1:
        raise ValueError(f"segment length must be >= 1, got {b}")
    if eta.kind not in ("character", "supercuspidal"):
        raise UnsupportedCase(f"sigma_b needs a character or supercuspidal, got {eta.describe()}")
    if b == 1:
        return eta
    shift = Fraction(1, q ** (b - 1))
    params = tuple(a * shift for a in eta.params) + (ZERO,) * ((b - 1) * eta.degree)
    return RepDescriptor(
        b * eta.degree,
        params,
        _default_segment_conductor(eta, b) if cond_exp is None else cond_exp,
        eta.central.power(b) if central is None else central,
        kind="segment",
        segment=(b, eta),
    )


def components(rep: RepDescriptor) -> tuple[RepDescriptor, ...]:
    """Essentially square-integrable summands of ``rep``."""
    return rep.parts if rep.kind == "sum" else (rep,)


def langlands_sum(a: RepDescriptor, b: RepDescriptor) -> RepDescriptor:
    return RepDescriptor(
        a.degree + b.degree,
        a.params + b.params,
        a.cond_exp + b.cond_exp,
        a.central * b.central,
        kind="sum",
        parts=components(a) + components(b),
    )


def twist_unramified(a: RepDescriptor, t) -> RepDescriptor:
    """a (x) chi_t with chi_t(varpi) = t unramified."""
    t = CycScalar.coerce(t)
    if t.is_zero():
        raise ValueError("unramified twist by zero")
    central = replace(a.central, unram_value=a.central.unram_value * t**a.degree)
    params = tuple(x * t for x in a.params)
    segment = parts = None
    if a.kind == "segment":
        b, eta = a.segment
        segment = (b, twist_unramified(eta, t))
    if a.kind == "sum":
        parts = tuple(twist_unramified(p, t) for p in a.parts)
    return replace(a, params=params, central=central, segment=segment, parts=parts or a.parts)


def esi_view(rep: RepDescriptor) -> tuple[int, RepDescriptor]:
    """(b, eta) with rep = sigma_b(eta)."""
    if rep.kind == "segment":
        return rep.segment
    if rep.kind in ("character", "supercuspidal"):
        return 1, rep
    raise UnsupportedCase(f"{rep.describe()} is not tagged as essentially square-integrable")


def standard_lfactor(rep: RepDescriptor) -> XRational:
    return lfactor_from_params(rep.params)


def naive_rs_lfactor(pi: RepDescriptor, tau: RepDescriptor) -> XRational:
    return naive_rs(pi.params, tau.params)


def _twist_value(mu: RepDescriptor, nu: RepDescriptor) -> CycScalar | None:
    """(mu nu)(varpi) if mu nu is unramified, else None."""
    fm, fn = mu.central.finite, nu.central.finite
    if fm is None and fn is None:
        unramified = True
    elif fm is None or fn is None:
        unramified = False
    else:
        unramified = (fm * fn).is_trivial()
    return mu.central.unram_value * nu.central.unram_value if unramified else None


def boxtimes_esi(pi: RepDescriptor, tau: RepDescriptor, q: int) -> XRational:
    """Genuine L(s, pi x tau) for essentially square-integrable pi and tau."""
    b, eta = esi_view(pi)
    m, chi = esi_view(tau)
    if eta.kind != "character" or chi.kind != "character":
        return XRational.one()
    value = _twist_value(eta, chi)
    if value is None:
        return XRational.one()
    params = [value * Fraction(1, q ** (b + m - 2 - j)) for j in range(min(b, m))]
    return lfactor_from_params(params)


def boxtimes(pi: RepDescriptor, tau: RepDescriptor, q: int) -> XRational:
    """Genuine factor of Langlands sums, by additivity over the components."""
    out = XRational.one()
    for a in components(pi):
        for c in components(tau):
            out = out * boxtimes_esi(a, c, q)
    return out


def correction_polynomial(pi: RepDescriptor, tau: RepDescriptor, q: int) -> XPoly:
    """P with L(s, pi x tau) = P(q^-s) L(s, pi [x] tau), checked to satisfy P(0) = 1."""
    try:
        poly = divide_exact(naive_rs_lfactor(pi, tau), boxtimes(pi, tau, q))
    except ArithmeticError as exc:
        raise LemmaViolation(f"{pi.describe()} x {tau.describe()}: {exc}") from exc
    if poly[0] != 1:
        raise LemmaViolation(f"{pi.describe()} x {tau.describe()}: P(0) = {poly[0]}")
    return poly
