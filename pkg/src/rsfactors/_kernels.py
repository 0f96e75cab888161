"""Integer kernels behind the exact layer.

Each kernel has a numba ``@njit`` version and a pure-numpy version with the same
signature and output.  The numba path is used when numba imports and
``RSFACTORS_DISABLE_NUMBA`` is unset (or ``0``); set it to ``1`` to force the
numpy path, e.g. for debugging or on platforms without an LLVM toolchain.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

__all__ = [
    "USE_NUMBA",
    "gauss_histogram",
    "count_gl_and_k0",
    "modulus_exponents",
    "partition_table",
    "numpy_impl",
    "numba_impl",
]


def _numba_requested() -> bool:
    flag = os.environ.get("RSFACTORS_DISABLE_NUMBA", "").strip().lower()
    return flag in ("", "0", "false", "no")


try:
    if not _numba_requested():
        raise ImportError("numba disabled by RSFACTORS_DISABLE_NUMBA")
    import numba as nb

    HAVE_NUMBA = True
except ImportError:
    nb = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA


# ---------------------------------------------------------------------------
# numpy versions
# ---------------------------------------------------------------------------


def _gauss_histogram_np(table, n_chi, a, pv, n):
    z = np.nonzero(table >= 0)[0]
    k = table[z] * (n // n_chi) + ((a * z) % pv) * (n // pv)
    return np.bincount(k % n, minlength=n).astype(np.int64)


def _count_gl_and_k0_np(m, p):
    total = p ** (m * m)
    digits = np.arange(total, dtype=np.int64)
    mats = np.empty((total, m, m), dtype=np.int64)
    for pos in range(m * m):
        mats[:, pos // m, pos % m] = digits % p
        digits //= p
    det = np.zeros(total, dtype=np.int64)
    for perm in itertools.permutations(range(m)):
        inversions = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        term = np.ones(total, dtype=np.int64)
        for i in range(m):
            term = term * mats[:, i, perm[i]]
        det += -term if inversions % 2 else term
    invertible = (det % p) != 0
    last_row_ok = np.all(mats[:, m - 1, : m - 1] == 0, axis=1) if m > 1 else np.ones(total, bool)
    return int(invertible.sum()), int((invertible & last_row_ok).sum())


def _modulus_exponents_np(table):
    # delta(d_n(lam)) = q^-E with E = sum_i i(n-i) * (lam_{n-i} - lam_{n-i+1})
    n = table.shape[1]
    out = np.zeros(table.shape[0], dtype=np.int64)
    for i in range(1, n):
        out += i * (n - i) * (table[:, n - i - 1] - table[:, n - i])
    return out


def _partition_rows(max_weight, max_length):
    for w in range(max_weight + 1):
        if w == 0:
            yield ()
            continue
        if max_length == 0:
            continue
        # reverse lexicographic order within one weight
        parts = [w]
        while True:
            if len(parts) <= max_length:
                yield tuple(parts)
            # rightmost part > 1
            i = len(parts) - 1
            while i >= 0 and parts[i] == 1:
                i -= 1
            if i < 0:
                break
            rest = sum(parts[i:])
            top = parts[i] - 1
            parts = parts[:i]
            while rest:
                take = min(top, rest)
                parts.append(take)
                rest -= take


def _partition_table_np(max_weight, max_length):
    rows = list(_partition_rows(max_weight, max_length))
    out = np.zeros((len(rows), max(max_length, 1)), dtype=np.int64)
    for r, row in enumerate(rows):
        out[r, : len(row)] = row
    return out


numpy_impl = {
    "gauss_histogram": _gauss_histogram_np,
    "count_gl_and_k0": _count_gl_and_k0_np,
    "modulus_exponents": _modulus_exponents_np,
    "partition_table": _partition_table_np,
}


# ---------------------------------------------------------------------------
# numba versions
# ---------------------------------------------------------------------------

numba_impl = {}

if HAVE_NUMBA:

    @nb.njit(cache=True)
    def _gauss_histogram_nb(table, n_chi, a, pv, n):
        hist = np.zeros(n, dtype=np.int64)
        step_chi = n // n_chi
        step_psi = n // pv
        for z in range(table.shape[0]):
            e = table[z]
            if e < 0:
                continue
            k = e * step_chi + ((a * z) % pv) * step_psi
            hist[k % n] += 1
        return hist

    @nb.njit(cache=True)
    def _det_mod_p(mat, m, p):
        a = mat.copy()
        det = 1
        for col in range(m):
            piv = -1
            for r in range(col, m):
                if a[r, col] % p != 0:
                    piv = r
                    break
            if piv < 0:
                return 0
            if piv != col:
                for c in range(m):
                    tmp = a[col, c]
                    a[col, c] = a[piv, c]
                    a[piv, c] = tmp
                det = -det
            pv = a[col, col] % p
            det = (det * pv) % p
            inv = 1
            for _ in range(p - 2):
                inv = (inv * pv) % p
            for r in range(col + 1, m):
                f = (a[r, col] * inv) % p
                if f:
                    for c in range(col, m):
                        a[r, c] = (a[r, c] - f * a[col, c]) % p
        return det % p

    @nb.njit(cache=True)
    def _count_gl_and_k0_nb(m, p):
        total = p ** (m * m)
        mat = np.empty((m, m), dtype=np.int64)
        n_gl = 0
        n_k0 = 0
        for idx in range(total):
            x = idx
            for pos in range(m * m):
                mat[pos // m, pos % m] = x % p
                x //= p
            if _det_mod_p(mat, m, p) == 0:
                continue
            n_gl += 1
            ok = True
            for c in range(m - 1):
                if mat[m - 1, c] != 0:
                    ok = False
                    break
            if ok:
                n_k0 += 1
        return n_gl, n_k0

    @nb.njit(cache=True)
    def _modulus_exponents_nb(table):
        rows, n = table.shape
        out = np.zeros(rows, dtype=np.int64)
        for r in range(rows):
            acc = 0
            for i in range(1, n):
                acc += i * (n - i) * (table[r, n - i - 1] - table[r, n - i])
            out[r] = acc
        return out

    @nb.njit(cache=True)
    def _fill_partitions(max_weight, max_length, out, write):
        count = 0
        width = max(max_length, 1)
        parts = np.zeros(max_weight + 1, dtype=np.int64)
        for w in range(max_weight + 1):
            if w == 0:
                if write:
                    for c in range(width):
                        out[count, c] = 0
                count += 1
                continue
            if max_length == 0:
                continue
            parts[0] = w
            length = 1
            while True:
                if length <= max_length:
                    if write:
                        for c in range(width):
                            out[count, c] = parts[c] if c < length else 0
                    count += 1
                i = length - 1
                while i >= 0 and parts[i] == 1:
                    i -= 1
                if i < 0:
                    break
                rest = 0
                for j in range(i, length):
                    rest += parts[j]
                top = parts[i] - 1
                length = i
                while rest > 0:
                    take = top if top < rest else rest
                    parts[length] = take
                    length += 1
                    rest -= take
        return count

    def _partition_table_nb(max_weight, max_length):
        dummy = np.zeros((1, 1), dtype=np.int64)
        count = _fill_partitions(max_weight, max_length, dummy, False)
        out = np.zeros((count, max(max_length, 1)), dtype=np.int64)
        _fill_partitions(max_weight, max_length, out, True)
        return out

    numba_impl = {
        "gauss_histogram": _gauss_histogram_nb,
        "count_gl_and_k0": _count_gl_and_k0_nb,
        "modulus_exponents": _modulus_exponents_nb,
        "partition_table": _partition_table_nb,
    }

_active = numba_impl if USE_NUMBA else numpy_impl


def gauss_histogram(table: np.ndarray, n_chi: int, a: int, pv: int, n: int) -> np.ndarray:
    """Exponent counts of ``chi(z) * zeta_pv^(a z)`` over the units ``z`` of ``table``.

    ``table[z]`` is the exponent of ``chi(z)`` as a power of zeta_{n_chi}, or -1 when
    z is not a unit.  Both roots are rewritten as powers of zeta_n (n a common
    multiple of n_chi and pv); entry k of the result counts terms equal to zeta_n^k.
    """
    return _active["gauss_histogram"](np.ascontiguousarray(table, dtype=np.int64), n_chi, a, pv, n)


def count_gl_and_k0(m: int, p: int) -> tuple[int, int]:
    """(|GL_m(Z/p)|, |K_0(p)|) by enumerating every m x m matrix over Z/p."""
    n_gl, n_k0 = _active["count_gl_and_k0"](m, p)
    return int(n_gl), int(n_k0)


def modulus_exponents(table: np.ndarray) -> np.ndarray:
    """E with delta_B(d_n(lam)) = q^-E for each row lam of ``table`` (torus coordinates)."""
    return _active["modulus_exponents"](np.ascontiguousarray(table, dtype=np.int64))


def partition_table(max_weight: int, max_length: int) -> np.ndarray:
    """Partitions of weight <= max_weight and length <= max_length, one per row.

    Rows are zero padded to ``max(max_length, 1)`` columns and come in graded
    reverse-lexicographic order.
    """
    return _active["partition_table"](max_weight, max_length)
