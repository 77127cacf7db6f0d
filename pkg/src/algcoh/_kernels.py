"""Hot inner loops over F_p: row reduction and idempotent scanning.

Each kernel has a numba version and a pure-numpy version with identical
results.  The numba path is used when numba imports cleanly and the
environment variable ``ALGCOH_DISABLE_NUMBA`` is unset (or "0").
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

USE_NUMBA = _HAVE_NUMBA and os.environ.get("ALGCOH_DISABLE_NUMBA", "0") in ("", "0")


# -- numpy fallbacks -------------------------------------------------------

def rref_modp_numpy(mat: np.ndarray, p: int):
    R = np.mod(np.array(mat, dtype=np.int64), p)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = pow(int(R[r, c]), -1, p)
        R[r] = (R[r] * inv) % p
        factors = R[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[hit] = (R[hit] - np.outer(factors[hit], R[r])) % p
        pivots.append(c)
        r += 1
    return R, np.array(pivots, dtype=np.int64)


def idempotent_scan_numpy(mul: np.ndarray, p: int) -> np.ndarray:
    """Indices (lexicographic order) of all x in F_p^n with x*x == x."""
    n = mul.shape[0]
    total = p ** n
    idx = np.arange(total, dtype=np.int64)
    # coordinate 0 is the most significant digit
    coords = np.empty((total, n), dtype=np.int64)
    rest = idx.copy()
    for k in range(n - 1, -1, -1):
        coords[:, k] = rest % p
        rest //= p
    sq = np.zeros((total, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            row = mul[i, j]
            if not row.any():
                continue
            w = (coords[:, i] * coords[:, j]) % p
            sq = (sq + np.outer(w, row)) % p
    return idx[np.all(sq == coords, axis=1)]


# -- numba kernels ---------------------------------------------------------

if _HAVE_NUMBA:

    @njit(cache=True)
    def _inv_modp(a, p):
        t, new_t = 0, 1
        r, new_r = p, a % p
        while new_r != 0:
            q = r // new_r
            t, new_t = new_t, t - q * new_t
            r, new_r = new_r, r - q * new_r
        if t < 0:
            t += p
        return t

    @njit(cache=True)
    def _rref_modp_nb(R, p):
        rows, cols = R.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            k = -1
            for i in range(r, rows):
                if R[i, c] != 0:
                    k = i
                    break
            if k < 0:
                continue
            if k != r:
                for j in range(cols):
                    tmp = R[r, j]
                    R[r, j] = R[k, j]
                    R[k, j] = tmp
            inv = _inv_modp(R[r, c], p)
            for j in range(cols):
                R[r, j] = (R[r, j] * inv) % p
            for i in range(rows):
                if i == r:
                    continue
                f = R[i, c]
                if f == 0:
                    continue
                for j in range(c, cols):
                    R[i, j] = (R[i, j] - f * R[r, j]) % p
            pivots[r] = c
            r += 1
        return pivots[:r]

    @njit(cache=True)
    def _idempotent_scan_nb(mul, p):
        n = mul.shape[0]
        total = 1
        for _ in range(n):
            total *= p
        out = np.empty(total, dtype=np.int64)
        count = 0
        x = np.zeros(n, dtype=np.int64)
        sq = np.zeros(n, dtype=np.int64)
        for idx in range(total):
            rest = idx
            for k in range(n - 1, -1, -1):
                x[k] = rest % p
                rest //= p
            for k in range(n):
                sq[k] = 0
            for i in range(n):
                if x[i] == 0:
                    continue
                for j in range(n):
                    if x[j] == 0:
                        continue
                    w = (x[i] * x[j]) % p
                    for k in range(n):
                        sq[k] = (sq[k] + w * mul[i, j, k]) % p
            ok = True
            for k in range(n):
                if sq[k] != x[k]:
                    ok = False
                    break
            if ok:
                out[count] = idx
                count += 1
        return out[:count]


def rref_modp_numba(mat: np.ndarray, p: int):
    if not _HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba is not available")
    R = np.mod(np.array(mat, dtype=np.int64), p)
    if R.size == 0:
        return R, np.zeros(0, dtype=np.int64)
    pivots = _rref_modp_nb(R, np.int64(p))
    return R, pivots


def idempotent_scan_numba(mul: np.ndarray, p: int) -> np.ndarray:
    if not _HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba is not available")
    return _idempotent_scan_nb(np.ascontiguousarray(mul, dtype=np.int64), np.int64(p))


def rref_modp(mat: np.ndarray, p: int):
    if USE_NUMBA:
        return rref_modp_numba(mat, p)
    return rref_modp_numpy(mat, p)


def idempotent_scan(mul: np.ndarray, p: int) -> np.ndarray:
    if USE_NUMBA:
        return idempotent_scan_numba(mul, p)
    return idempotent_scan_numpy(mul, p)


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
