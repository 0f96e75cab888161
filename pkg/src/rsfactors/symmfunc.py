"""Partitions and exact Schur polynomial evaluation.

``schur_eval`` uses the Jacobi-Trudi determinant in the complete homogeneous
symmetric polynomials; it is well defined for repeated and zero parameters.
``schur_eval_tableaux`` sums monomials over semistandard tableaux and exists as
an independent oracle for it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from . import _kernels
from .scalars import ONE, ZERO, CycScalar

__all__ = [
    "Partition",
    "TableauxBoundError",
    "partitions_upto",
    "complete_homogeneous",
    "complete_homogeneous_table",
    "schur_eval",
    "schur_eval_tableaux",
    "TABLEAUX_MAX_WEIGHT",
]

TABLEAUX_MAX_WEIGHT = 12


class Partition(tuple):
    """Weakly decreasing tuple of non-negative integers, trailing zeros dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        for i, x in enumerate(parts):
            if x < 0:
                raise ValueError(f"negative part in {parts}")
            if i and parts[i - 1] < x:
                raise ValueError(f"parts of {parts} are not weakly decreasing")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} non-zero parts")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self):
        return f"Partition({tuple(self)})"


def partitions_upto(max_weight: int, max_length: int) -> list[Partition]:
    """All partitions with weight <= max_weight and length <= max_length.

    Ordered by weight, then reverse-lexicographically within a weight, so
    ``partitions_upto(3, 2)`` is ``(), (1), (2), (1,1), (3), (2,1)``.
    """
    if max_weight < 0 or max_length < 0:
        raise ValueError("bounds must be non-negative")
    return [Partition(row) for row in _kernels.partition_table(max_weight, max_length).tolist()]


@lru_cache(maxsize=4096)
def complete_homogeneous_table(params: tuple[CycScalar, ...], kmax: int) -> tuple[CycScalar, ...]:
    """(h_0, ..., h_kmax) of ``params``, the coefficients of prod_i 1/(1 - x_i t)."""
    h = [ONE] + [ZERO] * kmax
    for x in params:
        if x.is_zero():
            continue
        for j in range(1, kmax + 1):
            h[j] = h[j] + x * h[j - 1]
    return tuple(h)


def complete_homogeneous(k: int, params: Sequence) -> CycScalar:
    if k < 0:
        return ZERO
    return complete_homogeneous_table(tuple(CycScalar.coerce(x) for x in params), k)[k]


def _det(rows: list[list[CycScalar]]) -> CycScalar:
    a = [list(r) for r in rows]
    n = len(a)
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            if a[r][col].is_zero():
                continue
            f = a[r][col] * inv
            row_r, row_c = a[r], a[col]
            for c in range(col + 1, n):
                row_r[c] = row_r[c] - f * row_c[c]
    return det


def schur_eval(lam, params: Sequence) -> CycScalar:
    """s_lam(params) via det(h_{lam_i - i + j}); zero when lam has more parts than params."""
    lam = Partition(lam)
    params = tuple(CycScalar.coerce(x) for x in params)
    ell = lam.length
    if ell == 0:
        return ONE
    if ell > len(params):
        return ZERO
    h = complete_homogeneous_table(params, lam[0] + ell - 1)

    def hk(k):
        return h[k] if k >= 0 else ZERO

    return _det([[hk(lam[i] - i + j) for j in range(ell)] for i in range(ell)])


class TableauxBoundError(ValueError):
    """Raised when tableaux enumeration is asked for a shape above the weight bound."""


def schur_eval_tableaux(lam, params: Sequence, max_weight: int = TABLEAUX_MAX_WEIGHT) -> CycScalar:
    """s_lam(params) as a sum over semistandard Young tableaux with entries 1..len(params)."""
    lam = Partition(lam)
    if lam.weight > max_weight:
        raise TableauxBoundError(
            f"tableaux enumeration refused: weight {lam.weight} exceeds bound {max_weight}"
        )
    xs = [CycScalar.coerce(x) for x in params]
    n = len(xs)
    cells = [(r, c) for r, row_len in enumerate(lam) for c in range(row_len)]
    filling: dict[tuple[int, int], int] = {}
    total = ZERO

    def fill(idx: int, mono: CycScalar):
        nonlocal total
        if idx == len(cells):
            total = total + mono
            return
        r, c = cells[idx]
        lo = 0
        if c:
            lo = filling[(r, c - 1)]
        if r:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n):
            filling[(r, c)] = v
            fill(idx + 1, mono * xs[v])
        filling.pop((r, c), None)

    fill(0, ONE)
    return total
