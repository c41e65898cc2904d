"""Hot loops: three-term recurrences and Sturm bisection.

Every kernel is compiled with numba when it is available.  With
``PRASYM_DISABLE_NUMBA=1`` the same code runs as plain Python, except the
bisection which switches to a numpy version vectorised over all eigenvalues.
"""
import math

import numpy as np

from ._accel import NUMBA_ENABLED, njit

_BIG = 2.0 ** 512
_SMALL = 2.0 ** -512


@njit(cache=True)
def _renorm(p0, p1):
    # returns (p0, p1, shift) with the pair scaled by 2**-shift
    m = max(abs(p0), abs(p1))
    if m > _BIG or (m < _SMALL and m > 0.0):
        _, e = math.frexp(m)
        return math.ldexp(p0, -e), math.ldexp(p1, -e), e
    return p0, p1, 0


@njit(cache=True)
def monic_scaled(x, alpha, beta, n):
    """pi_{k+1} = (x - alpha_k) pi_k - beta_k pi_{k-1} with beta_0 unused."""
    mant = np.zeros(n + 1)
    expo = np.zeros(n + 1, dtype=np.int64)
    pm, pc, e = 0.0, 1.0, 0
    mant[0] = 1.0
    for k in range(n):
        pn = (x - alpha[k]) * pc - beta[k] * pm
        pm, pc = pc, pn
        pm, pc, s = _renorm(pm, pc)
        e += s
        mant[k + 1] = pc
        expo[k + 1] = e
    return mant, expo


@njit(cache=True)
def standard_scaled(x, A, B, n):
    """p_{k+1} = (A_k x + B_k) p_k - p_{k-1}, p_0 = 1, p_{-1} = 0."""
    mant = np.zeros(n + 1)
    expo = np.zeros(n + 1, dtype=np.int64)
    pm, pc, e = 0.0, 1.0, 0
    mant[0] = 1.0
    for k in range(n):
        pn = (A[k] * x + B[k]) * pc - pm
        pm, pc = pc, pn
        pm, pc, s = _renorm(pm, pc)
        e += s
        mant[k + 1] = pc
        expo[k + 1] = e
    return mant, expo


@njit(cache=True)
def orthonormal_complex(z, alpha, boff, n):
    """Orthonormal recurrence at complex z.

    z P_k = b_{k+1} P_{k+1} + alpha_k P_k + b_k P_{k-1}, P_0 = 1; boff[k] = b_k
    (boff[0] ignored).  Same mantissa/exponent output as the real kernels.
    """
    mant = np.zeros(n + 1, dtype=np.complex128)
    expo = np.zeros(n + 1, dtype=np.int64)
    pm = 0.0 + 0.0j
    pc = 1.0 + 0.0j
    e = 0
    mant[0] = pc
    for k in range(n):
        pn = ((z - alpha[k]) * pc - boff[k] * pm) / boff[k + 1]
        pm, pc = pc, pn
        m = max(abs(pm), abs(pc))
        if m > _BIG or (m < _SMALL and m > 0.0):
            _, s = math.frexp(m)
            pm = pm * 2.0 ** (-s)
            pc = pc * 2.0 ** (-s)
            e += s
        mant[k + 1] = pc
        expo[k + 1] = e
    return mant, expo


@njit(cache=True)
def sturm_count(diag, offsq, shift, pivmin):
    """Number of eigenvalues of the symmetric tridiagonal matrix below ``shift``."""
    cnt = 0
    d = diag[0] - shift
    if abs(d) < pivmin:
        d = -pivmin
    if d < 0.0:
        cnt += 1
    for k in range(1, diag.shape[0]):
        d = (diag[k] - shift) - offsq[k - 1] / d
        if abs(d) < pivmin:
            d = -pivmin
        if d < 0.0:
            cnt += 1
    return cnt


@njit(cache=True)
def _bisect_jit(diag, offsq, lo0, hi0, reltol, abstol, pivmin, maxit):
    n = diag.shape[0]
    lo = np.empty(n)
    hi = np.empty(n)
    for j in range(n):
        # j-th smallest eigenvalue: count(lo) <= j < count(hi)
        a, b = lo0, hi0
        for _ in range(maxit):
            if b - a <= max(reltol * max(abs(a), abs(b)), abstol):
                break
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break
            if sturm_count(diag, offsq, mid, pivmin) > j:
                b = mid
            else:
                a = mid
        lo[j] = a
        hi[j] = b
    return lo, hi


def _bisect_numpy(diag, offsq, lo0, hi0, reltol, abstol, pivmin, maxit):
    n = diag.shape[0]
    lo = np.full(n, lo0)
    hi = np.full(n, hi0)
    idx = np.arange(n)
    for _ in range(maxit):
        width = hi - lo
        active = width > np.maximum(reltol * np.maximum(np.abs(lo), np.abs(hi)), abstol)
        if not active.any():
            break
        mid = 0.5 * (lo + hi)
        active &= (mid > lo) & (mid < hi)
        if not active.any():
            break
        # vectorised Sturm count over all shifts at once
        d = diag[0] - mid
        d = np.where(np.abs(d) < pivmin, -pivmin, d)
        cnt = (d < 0).astype(np.int64)
        for k in range(1, n):
            d = (diag[k] - mid) - offsq[k - 1] / d
            d = np.where(np.abs(d) < pivmin, -pivmin, d)
            cnt += d < 0
        go_left = cnt > idx
        hi = np.where(active & go_left, mid, hi)
        lo = np.where(active & ~go_left, mid, lo)
    return lo, hi


def bisect_eigenvalues(diag, offsq, lo0, hi0, reltol, abstol, maxit=200):
    """Brackets [lo_j, hi_j] for every eigenvalue, in increasing order."""
    diag = np.ascontiguousarray(diag, dtype=np.float64)
    offsq = np.ascontiguousarray(offsq, dtype=np.float64)
    scale = max(np.max(np.abs(diag)), np.sqrt(np.max(offsq)) if offsq.size else 0.0, 1e-300)
    pivmin = np.finfo(float).tiny * max(1.0, np.max(offsq) if offsq.size else 1.0)
    pivmin = max(pivmin, 1e-290)
    abstol = max(abstol, 4 * np.finfo(float).eps * scale)
    if NUMBA_ENABLED:
        return _bisect_jit(diag, offsq, float(lo0), float(hi0), reltol, abstol, pivmin, maxit)
    return _bisect_numpy(diag, offsq, float(lo0), float(hi0), reltol, abstol, pivmin, maxit)
