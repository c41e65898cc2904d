"""Phase maps U (turning point t_+) and U* (turning point 0) and the
region classifier.

U is the Airy variable: U < 0 on the oscillatory side, U > 0 beyond t_+.
U* is the Bessel variable near the lower end of the support (birth-death
families only): U* > 0 for 0 < t < t_+ and U* < 0 for t < 0.
"""
from __future__ import annotations

import enum
import math
from functools import lru_cache

import numpy as np

from .families import FamilyKind, FamilySpec, constants, nu
from .specfun import DomainError, beta_inc, elliptic_f, hyp2f1_special

WINDOW = 0.05  # relative half-width around t_+ where the regularised form is used
AIRY_BAND = 2.0
BESSEL_BAND = 4.0

_K_CI = elliptic_f(math.pi / 2, -1.0)


def _params(f: FamilySpec):
    # (T, p, D0): edge, power in (t/s)^p, constant in the edge square root
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return 8.0, 0.5, 16.0
    if f.kind is FamilyKind.BERG_VALENT:
        return 1024.0, 0.25, 1024.0
    return 108.0, 1.0 / 3.0, 108.0


@lru_cache(maxsize=1)
def _gauss(npts=48):
    w, wt = np.polynomial.legendre.leggauss(npts)
    return 0.5 * (w + 1), 0.5 * wt


def _reg_integral(f: FamilySpec, t: float) -> float:
    """(U / (t - t_+)) computed from the edge-regularised integral.

    With s = T + delta*u the defining integral becomes |delta|^{3/2} times a
    smooth function of delta, so the ratio has no cancellation at t = T.
    """
    T, p, D0 = _params(f)
    delta = t - T
    d = delta / T
    w, wt = _gauss()
    u = w * w
    if d == 0.0:
        q = p * (1.0 - u)
    else:
        q = np.expm1(p * (math.log1p(d) - np.log1p(d * u))) / d
    J = float(np.sum(wt * 2.0 * q / np.sqrt(D0 + delta * u)))
    return (1.5 * J / T) ** (2.0 / 3.0)


def _g_upper(f: FamilySpec, t: float) -> float:
    """(2/3) U^{3/2} for t > t_+ from the closed forms."""
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return (math.sqrt(t / 2) * (_K_CI - elliptic_f(math.asin(math.sqrt(8.0 / t)), -1.0))
                - math.log((t + math.sqrt(t * t - 64.0)) / 8.0))
    if f.kind is FamilyKind.BERG_VALENT:
        return (math.sqrt(2.0) * t ** 0.25 / 8 * beta_inc(1 - 1024.0 / t, 0.5, 0.25)
                - math.log((t - 512.0 + math.sqrt(t * (t - 1024.0))) / 512.0))
    return ((2 * t) ** (1 / 3) / 6 * beta_inc(1 - 108.0 / t, 0.5, 1 / 3)
            - math.log((t - 54.0 + math.sqrt(t * (t - 108.0))) / 54.0))


def inner_phase_integral(f: FamilySpec, t: float) -> float:
    """int_t^T (t/s)^p ds / sqrt(edge form) for 0 <= t <= T (closed form)."""
    t = float(t)
    T, _, _ = _params(f)
    if not 0 <= t <= T:
        raise DomainError("inner phase integral needs 0 <= t <= t_+")
    if t == 0:
        return 0.0
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return math.sqrt(2 * t) / 8 * beta_inc(1 - t * t / 64.0, 0.5, 0.25)
    if f.kind is FamilyKind.BERG_VALENT:
        return math.sqrt(2.0) * t ** 0.25 / 8 * beta_inc(1 - t / 1024.0, 0.5, 0.25)
    return (2 * t) ** (1 / 3) / 6 * beta_inc(1 - t / 108.0, 0.5, 1 / 6)


def _g_lower(f: FamilySpec, t: float) -> float:
    """(2/3)(-U)^{3/2} for 0 < t < t_+."""
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return math.acos(t / 8.0) - inner_phase_integral(f, t)
    if f.kind is FamilyKind.BERG_VALENT:
        return math.acos((t - 512.0) / 512.0) - inner_phase_integral(f, t)
    return math.acos((t - 54.0) / 54.0) - inner_phase_integral(f, t)


def _check_t(f, t):
    t = float(t)
    if not math.isfinite(t):
        raise DomainError("t must be finite")
    if f.kind is FamilyKind.CHEN_ISMAIL:
        if t <= -8.0:
            raise DomainError("ChenIsmail phase map needs t > -8")
        return abs(t)  # parity: F_n(-x) = (-1)^n F_n(x)
    if t <= 0.0:
        raise DomainError("U needs t > 0 for birth-death families")
    return t


def U(f: FamilySpec, t: float) -> float:
    """Airy phase map, U(t_+) = 0, increasing in t."""
    t = _check_t(f, t)
    T = constants(f).t_plus
    if abs(t - T) <= WINDOW * T:
        return (t - T) * _reg_integral(f, t)
    if t > T:
        return (1.5 * _g_upper(f, t)) ** (2.0 / 3.0)
    if t == 0.0:
        return -(1.5 * math.pi / 2) ** (2.0 / 3.0)
    return -(1.5 * _g_lower(f, t)) ** (2.0 / 3.0)


def U_over_delta(f: FamilySpec, t: float) -> float:
    """U(t) / (t - t_+), continuous through t_+ (where it is the slope)."""
    tt = _check_t(f, t)
    T = constants(f).t_plus
    if abs(tt - T) <= WINDOW * T:
        return _reg_integral(f, tt)
    return U(f, tt) / (tt - T)


def U_slope(f: FamilySpec) -> float:
    """Closed-form U'(t_+)."""
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return 1.0 / (8 * 2 ** (1 / 3))
    if f.kind is FamilyKind.BERG_VALENT:
        return 1.0 / (1024 * 4 ** (1 / 3))
    return 1.0 / (54 * 18 ** (1 / 3))


def U_star_slope(f: FamilySpec) -> float:
    if f.kind is FamilyKind.BERG_VALENT:
        return 1.0 / 256
    if f.kind in (FamilyKind.CF_I, FamilyKind.CF_II):
        return 4.0 / 27
    raise DomainError("U* is defined for birth-death families only")


def lower_phase_integral(f: FamilySpec, t: float) -> float:
    """int_t^0 (t/s)^p / sqrt(s(s - T)) ds for t < 0, via 2F1 at t/T."""
    T, p, _ = _params(f)
    b = 0.5 - p
    which = "BV" if f.kind is FamilyKind.BERG_VALENT else "CF"
    return math.sqrt(-t) / (math.sqrt(T) * b) * hyp2f1_special(which, t / T)


def U_star(f: FamilySpec, t: float) -> float:
    """Bessel phase map, U*(0) = 0, U* ~ slope * t."""
    if f.kind is FamilyKind.CHEN_ISMAIL:
        raise DomainError("U* is defined for birth-death families only")
    t = float(t)
    T = constants(f).t_plus
    if not math.isfinite(t) or t >= T:
        raise DomainError("U* needs t < t_+")
    if t == 0.0:
        return 0.0
    if t > 0:
        if f.kind is FamilyKind.BERG_VALENT:
            r = (math.sqrt(2.0) * t ** 0.25 / 8 * beta_inc(t / 1024.0, 0.25, 0.5)
                 - math.acos((512.0 - t) / 512.0))
        else:
            r = ((2 * t) ** (1 / 3) / 6 * beta_inc(t / 108.0, 1 / 6, 0.5)
                 - math.acos((54.0 - t) / 54.0))
        return r * r
    h = T / 2
    r = lower_phase_integral(f, t) - math.log((h - t + math.sqrt(t * (t - T))) / h)
    return -r * r


def theta_of_t(f: FamilySpec, t: float) -> float:
    """Angle parametrising the oscillatory region."""
    T = constants(f).t_plus
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return math.acos(t / T)
    return math.acos(math.sqrt(t / T))


def t_of_theta(f: FamilySpec, theta: float) -> float:
    T = constants(f).t_plus
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return T * math.cos(theta)
    return T * math.cos(theta) ** 2


class Region(str, enum.Enum):
    OUTER_UPPER = "outer-upper"
    AIRY = "airy"
    OSCILLATORY = "oscillatory"
    BESSEL = "bessel"
    OUTER_LOWER = "outer-lower"


def classify_region(f: FamilySpec, n: int, t: float) -> Region:
    """Which approximant is the natural one at (n, t)."""
    v = nu(f, n)
    tt = abs(t) if f.kind is FamilyKind.CHEN_ISMAIL else t
    T = constants(f).t_plus
    if tt > 0 and abs(v ** (2 / 3) * U(f, tt)) <= AIRY_BAND:
        return Region.AIRY
    if f.is_birth_death and tt < T:
        us = U_star(f, tt)
        if abs(v * math.sqrt(abs(us))) <= BESSEL_BAND:
            return Region.BESSEL
        if tt < 0:
            return Region.OUTER_LOWER
    return Region.OUTER_UPPER if tt > T else Region.OSCILLATORY
