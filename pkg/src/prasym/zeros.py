"""Zeros of the family polynomials and the bounds they satisfy."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import families as fam
from . import kernels
from .families import FamilyKind, FamilySpec, constants
from .specfun import DomainError


@dataclass(frozen=True)
class ZeroSet:
    """Zeros in decreasing order (zeros[0] is the largest, x_{n,1})."""

    family: FamilySpec
    n: int
    zeros: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    enclosure_width: float


def compute_zeros(f: FamilySpec, n: int, tol: float = 1e-13) -> ZeroSet:
    """All zeros of pi_n by Sturm-count bisection on the Jacobi matrix.

    Each zero is bracketed by [lo, hi] with hi - lo <= tol * |zero| or the
    floating-point floor (a few ulps of the matrix norm).
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError("compute_zeros needs n >= 1")
    n = int(n)
    diag, off = fam.build_jacobi(f, n)
    offsq = off * off
    # Gershgorin
    rad = np.zeros(n)
    rad[:-1] += off
    rad[1:] += off
    lo0 = float(np.min(diag - rad)) - 1.0
    hi0 = float(np.max(diag + rad)) + 1.0
    lo, hi = kernels.bisect_eigenvalues(diag, offsq, lo0, hi0, tol, 0.0)
    lo, hi = lo[::-1].copy(), hi[::-1].copy()
    z = 0.5 * (lo + hi)
    return ZeroSet(f, n, z, lo, hi, float(np.max(hi - lo)))


# ----------------------------------------------------------------------------
# chain-sequence bounds
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainBound:
    A: float
    B: float
    x: np.ndarray  # upper roots x_k, k = 1..n
    y: np.ndarray  # lower roots y_k


def chain_bound(f: FamilySpec, n: int) -> ChainBound:
    """Bounds A < zeros < B from the constant chain sequence 1/4.

    x_k, y_k = (alpha_k + alpha_{k-1})/2 +- sqrt((alpha_k - alpha_{k-1})^2 + 16 beta_k)/2,
    B = max x_k and A = min y_k for 1 <= k <= n.  Including k = n gives a
    slightly wider (still valid) interval whose endpoints have the closed
    forms of :func:`closed_form_bound`.
    """
    if n < 1:
        raise DomainError("chain_bound needs n >= 1")
    alpha, beta, _ = fam.coeff_arrays(f, n)
    k = np.arange(1, n + 1)
    a1, a0, b = alpha[k], alpha[k - 1], beta[k]
    mid = 0.5 * (a1 + a0)
    r = 0.5 * np.sqrt((a1 - a0) ** 2 + 16 * b)
    x = mid + r
    # y = mid - r written without cancellation: (a1 a0 - 4b) / (mid + r)
    y = (a1 * a0 - 4 * b) / (mid + r) if f.is_birth_death else mid - r
    return ChainBound(float(np.min(y)), float(np.max(x)), x, y)


def closed_form_bound(f: FamilySpec, n: int) -> tuple[float, float]:
    """Simple closed-form interval containing the zeros of pi_n."""
    if f.kind is FamilyKind.CHEN_ISMAIL:
        b = 8 * n * n * math.sqrt(1 - 1 / (4 * n * n))
        return -b, b
    if f.kind is FamilyKind.BERG_VALENT:
        return 4.29, 1024.0 * n ** 4 - 1024.0 * n ** 3 + 35 * 64.0 * n ** 2
    c = float(f.c)
    return -6.0 * n - 3, 108.0 * n ** 3 + 108 * c * n ** 2


def zeros_within_bounds(zs: ZeroSet) -> bool:
    cb = chain_bound(zs.family, zs.n)
    return bool(np.all(zs.lo > cb.A) and np.all(zs.hi < cb.B))


def interlaces(zn: ZeroSet, zn1: ZeroSet) -> bool:
    """Zeros of pi_n strictly separate those of pi_{n+1}."""
    a = zn1.zeros
    b = zn.zeros
    if len(a) != len(b) + 1:
        raise DomainError("need consecutive degrees")
    return bool(np.all(a[:-1] > b) and np.all(b > a[1:]))


# ----------------------------------------------------------------------------
# extreme zeros
# ----------------------------------------------------------------------------

def extreme_zero_residual(f: FamilySpec, n: int, k: int = 1, zs: ZeroSet | None = None) -> float:
    """|x_{n,k} - prediction| / nu^(theta - 4/3)."""
    from .asympt import extreme_zero_prediction
    zs = zs or compute_zeros(f, n)
    th = constants(f).theta
    return abs(zs.zeros[k - 1] - extreme_zero_prediction(f, n, k)) / fam.nu(f, n) ** (th - 4 / 3)


def hethcote_check(f: FamilySpec, n: int, k: int = 1, radius: float | None = None) -> bool:
    """Sign change of pi_n on [pred - radius, pred + radius].

    The default radius 8 t_+ nu^(theta - 4/3) tracks the size of the error
    term and isolates x_{n,1} for n >= 50.  Other k need an explicit radius;
    the leading prediction is poor there at moderate n.
    """
    from .asympt import extreme_zero_prediction
    pred = extreme_zero_prediction(f, n, k)
    if radius is None:
        radius = 8 * constants(f).t_plus * fam.nu(f, n) ** (constants(f).theta - 4 / 3)
    a = fam.evaluate_monic(f, n, pred - radius).value()
    b = fam.evaluate_monic(f, n, pred + radius).value()
    return a.sign * b.sign < 0
