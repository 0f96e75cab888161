"""Essential Whittaker functions on the diagonal torus and the zeta torus sum.

On d_n(lam) = diag(varpi^lam_1, ..., varpi^lam_n) the essential Whittaker
function of a representation with parameters alpha is
``delta_B(d_n(lam))^(1/2) * s_lam(alpha)``, and vanishes off dominant lam.
The half-integer powers of q stay formal (:class:`QGraded`) until every term of
the zeta sum has been multiplied out; each term must land in grade 0.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .lseries import XSeries
from .reps import RepDescriptor
from .scalars import ZERO, CycScalar, QGraded
from .symmfunc import Partition, partitions_upto, schur_eval

__all__ = [
    "GradeCollapseError",
    "modulus_exponent",
    "modulus_exponent_closed",
    "modulus_exponent_coords",
    "essential_whittaker_torus",
    "zeta_torus_terms",
    "zeta_torus_sum",
    "cauchy_sum",
]


class GradeCollapseError(AssertionError):
    """A zeta-sum term carried a non-zero half-power of q."""


def _check_dominant(n: int, lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"{lam} has more than {n} non-zero entries")
        lam = lam[:n]
    lam = lam + (0,) * (n - len(lam))
    if any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise ValueError(f"{lam} is not weakly decreasing")
    return lam


def modulus_exponent_coords(n: int, lam: Sequence[int]) -> int:
    """E from the torus coordinates a_i = varpi^(lam_{n-i} - lam_{n-i+1}) and
    delta = prod_i |a_i|^(i(n-i))."""
    row = np.asarray([_check_dominant(n, lam)], dtype=np.int64)
    return int(_kernels.modulus_exponents(row)[0])


def modulus_exponent_closed(n: int, lam: Sequence[int]) -> int:
    lam = _check_dominant(n, lam)
    return sum((n + 1 - 2 * i) * x for i, x in enumerate(lam, start=1))


def modulus_exponent(n: int, lam: Sequence[int]) -> int:
    """E with delta_{B_n}(d_n(lam)) = q^-E; both routes are computed and must agree."""
    e = modulus_exponent_coords(n, lam)
    closed = modulus_exponent_closed(n, lam)
    if e != closed:
        raise AssertionError(f"modulus exponent routes disagree at n={n}, lam={tuple(lam)}: {e} != {closed}")
    return e


def essential_whittaker_torus(n: int, lam: Sequence[int], alpha: Sequence, q: int) -> QGraded:
    """W(d_n(lam)) = delta_{B_n}(d_n(lam))^(1/2) s_lam(alpha); zero off the dominant cone."""
    if len(alpha) != n:
        raise ValueError(f"need {n} parameters, got {len(alpha)}")
    lam = tuple(int(x) for x in lam) + (0,) * max(0, n - len(lam))
    if len(lam) > n or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        return QGraded(ZERO, 0, q)
    if lam and lam[-1] < 0:
        raise ValueError("negative exponents are outside the torus points considered here")
    return QGraded(schur_eval(Partition(lam), alpha), -modulus_exponent(n, lam), q)


def zeta_torus_terms(
    alpha: Sequence, gamma: Sequence, d: int, q: int
) -> Iterator[tuple[Partition, QGraded]]:
    """Each (lam, term) of the torus sum, before grade collapse.

    term = W_pi(d_n(lam)) W_tau(d_m(lam)) delta_{B_m}(d_m(lam))^-1 q^((n-m)|lam|/2),
    the last factor being the s-independent part of ||det d_m(lam)||^(s-(n-m)/2).
    """
    n, m = len(alpha), len(gamma)
    for lam in partitions_upto(d, m):
        w_pi = essential_whittaker_torus(n, lam, alpha, q)
        w_tau = essential_whittaker_torus(m, lam, gamma, q)
        delta_inv = QGraded(1, 2 * modulus_exponent(m, lam), q)
        det_part = QGraded(1, (n - m) * lam.weight, q)
        yield lam, w_pi * w_tau * delta_inv * det_part


def zeta_torus_sum(pi: RepDescriptor, tau: RepDescriptor, d: int, q: int) -> XSeries:
    """Truncated torus form of the zeta integral of the essential vectors, as a series in X."""
    if not tau.degree < pi.degree:
        raise ValueError(f"need deg(tau) < deg(pi), got {tau.degree} and {pi.degree}")
    coeffs = [ZERO] * (d + 1)
    for lam, term in zeta_torus_terms(pi.params, tau.params, d, q):
        if term.halfq != 0:
            raise GradeCollapseError(f"term at lam={tuple(lam)} has q-grade {term.halfq}/2")
        coeffs[lam.weight] = coeffs[lam.weight] + term.collapse()
    return XSeries(coeffs, d)


def cauchy_sum(alpha: Sequence, gamma: Sequence, d: int) -> XSeries:
    """sum over |lam| <= d of s_lam(alpha) s_lam(gamma) X^|lam|."""
    alpha = [CycScalar.coerce(a) for a in alpha]
    gamma = [CycScalar.coerce(g) for g in gamma]
    coeffs = [ZERO] * (d + 1)
    for lam in partitions_upto(d, max(len(alpha), len(gamma))):
        a = schur_eval(lam, alpha)
        if a.is_zero():
            continue
        coeffs[lam.weight] = coeffs[lam.weight] + a * schur_eval(lam, gamma)
    return XSeries(coeffs, d)
