"""Weights, limiting zero distributions and determinacy diagnostics."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.integrate import quad

from . import families as fam
from .asympt import KAPPA_BV, RHO_CI, edge_true, edge_x
from .families import FamilyKind, FamilySpec, constants
from .specfun import DomainError, gamma
from .zeros import compute_zeros

LOG2 = math.log(2.0)


def _log_cos_plus_cosh(u):
    # log(cos u + cosh u), u >= 0
    e = math.exp(-u)
    return u - LOG2 + math.log1p(e * e + 2 * e * math.cos(u))


def ci_log_weight(x: float, alpha: float = 0.0) -> float:
    """log of the ChenIsmail weight w_alpha(x); alpha = 0 is the standard weight.

    w_alpha = sqrt(1-a^2) (cos u + cosh u) / (2[(cos u + cosh u)^2 - a^2 sin^2 u sinh^2 u])
    with u = rho sqrt(|x|/2); the expression is even in x.
    """
    if not -1 < alpha < 1:
        raise DomainError("weight parameter must satisfy |alpha| < 1")
    u = RHO_CI * math.sqrt(abs(float(x)) / 2)
    lc = _log_cos_plus_cosh(u)
    out = 0.5 * math.log1p(-alpha * alpha) - LOG2 - lc
    if alpha:
        # (sin u sinh u / (cos u + cosh u))^2
        e = math.exp(-2 * u)
        th = (1 - e) / (1 + e)
        r = math.sin(u) * th / (1 + 2 * math.cos(u) * math.exp(-u) / (1 + e))
        out -= math.log1p(-alpha * alpha * r * r)
    return out


def ci_weight(x: float, alpha: float = 0.0) -> float:
    return math.exp(ci_log_weight(x, alpha))


@dataclass(frozen=True)
class TailEnvelope:
    log_value: float
    conjecture: bool

    @property
    def value(self) -> float:
        return math.exp(self.log_value)


def weight_tail(f: FamilySpec, x: float) -> TailEnvelope:
    """Large-x weight envelope.  Only the ChenIsmail one is established."""
    x = float(x)
    if x <= 0:
        raise DomainError("weight tail needs x > 0")
    c = float(f.c)
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return TailEnvelope(ci_log_weight(x), False)
    if f.kind is FamilyKind.BERG_VALENT:
        k = math.sqrt(math.pi) * gamma(0.25) / (2 ** 1.5 * gamma(0.75))
        return TailEnvelope(-0.5 * math.log(x) - k * x ** 0.25, True)
    k = math.sqrt(math.pi) * 2 ** (1 / 3) * gamma(1 / 3) / (3 * gamma(5 / 6))
    p = (2 * c - 1) / 3 if f.kind is FamilyKind.CF_I else 2 * (c - 1) / 3
    return TailEnvelope(p * math.log(x) - k * x ** (1 / 3), True)


# ----------------------------------------------------------------------------
# limiting zero distribution
# ----------------------------------------------------------------------------

def _power(f: FamilySpec) -> int:
    return {FamilyKind.CHEN_ISMAIL: 2, FamilyKind.BERG_VALENT: 4}.get(f.kind, 3)


def limiting_density(f: FamilySpec, x: float) -> float:
    """Density of the limiting zero-counting measure of pi_n(t_+ nu^theta x)."""
    q = _power(f)
    if f.kind is FamilyKind.CHEN_ISMAIL:
        if not -1 < x < 1:
            return 0.0
        a = math.sqrt(abs(x))
        if a == 0.0:
            return math.inf
        return quad(lambda s: 1 / math.sqrt(s ** 4 - x * x), a, 1, limit=200)[0] / math.pi
    if not 0 < x < 1:
        return 0.0
    a = x ** (1 / q)
    return quad(lambda s: 1 / math.sqrt(x * (s ** q - x)), a, 1, limit=200)[0] / math.pi


def limiting_cdf(f: FamilySpec, x: float) -> float:
    """Cumulative limiting distribution; the inner integral is done in closed form."""
    x = float(x)
    if f.kind is FamilyKind.CHEN_ISMAIL:
        if x <= -1:
            return 0.0
        if x >= 1:
            return 1.0
        a = abs(x)
        r = math.sqrt(a)
        half = (r * math.pi / 2 + quad(lambda s: math.asin(a / (s * s)), r, 1, limit=200)[0]) / math.pi
        return 0.5 + half if x >= 0 else 0.5 - half
    q = _power(f)
    if x <= 0:
        return 0.0
    if x >= 1:
        return 1.0
    a = x ** (1 / q)
    return a + 2 / math.pi * quad(lambda s: math.asin(math.sqrt(x / s ** q)), a, 1, limit=200)[0]


def scaled_zeros(f: FamilySpec, n: int) -> np.ndarray:
    z = compute_zeros(f, n).zeros
    return z / (constants(f).t_plus * fam.nu(f, n) ** constants(f).theta)


def ks_distance(f: FamilySpec, n: int) -> float:
    """Kolmogorov-Smirnov distance between rescaled zeros and the limit law."""
    z = np.sort(scaled_zeros(f, n))
    F = np.array([limiting_cdf(f, v) for v in z])
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - F), np.max(F - (i - 1) / n)))


# ----------------------------------------------------------------------------
# determinacy diagnostics
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class IndeterminacyReport:
    N: int
    z: complex
    slope: float
    partial_sum: float
    partial_sum_double: float

    @property
    def sum_ratio(self) -> float:
        return self.partial_sum_double / self.partial_sum


def indeterminacy_check(f: FamilySpec, N: int = 2000, z: complex = 1j) -> IndeterminacyReport:
    """Decay of |hat-P_n(z)|^2 and convergence of its partial sums.

    ``slope`` is the least-squares slope of log|hat-P_n(z)|^2 against log n
    over [N/4, N]; summability needs a slope below -1.
    """
    if N < 8:
        raise DomainError("N too small")
    vals = fam.orthonormal_complex_trace(f, 2 * N, complex(z))
    sq = np.abs(vals) ** 2
    ns = np.arange(N // 4, N + 1)
    slope = float(np.polyfit(np.log(ns), np.log(sq[ns]), 1)[0])
    return IndeterminacyReport(N, complex(z), slope, float(np.sum(sq[:N + 1])), float(np.sum(sq)))


# ----------------------------------------------------------------------------
# edge-exponent conjecture
# ----------------------------------------------------------------------------

def conjecture_exponent(m: Fraction) -> Fraction:
    """k = 1/6 - 1/(2m) for a weight decaying like exp(-x^m)."""
    m = Fraction(m)
    if m <= 0:
        raise DomainError("m must be positive")
    return Fraction(1, 6) - 1 / (2 * m)


def weight_exponent(f: FamilySpec) -> Fraction:
    return {FamilyKind.CHEN_ISMAIL: Fraction(1, 2), FamilyKind.BERG_VALENT: Fraction(1, 4)}.get(
        f.kind, Fraction(1, 3))


@dataclass(frozen=True)
class ConjectureReport:
    m: Fraction
    k_predicted: Fraction
    k_observed: float
    theta_observed: float
    conjecture: bool = True


def conjecture_check(f: FamilySpec, ns=(25, 50, 100, 200)) -> ConjectureReport:
    """Fit the nu-exponent of the orthonormal edge value at s = 0 from the recurrence.

    Also fits the growth exponent of the largest zero, which should approach
    theta = 1/m.
    """
    ns = list(ns)
    nus = np.array([fam.nu(f, n) for n in ns])
    logs = np.array([edge_true(f, n, 0.0, True).log() for n in ns])
    k_obs = float(np.polyfit(np.log(nus), logs, 1)[0])
    tops = np.array([compute_zeros(f, n).zeros[0] for n in ns])
    th_obs = float(np.polyfit(np.log(nus), np.log(tops), 1)[0])
    m = weight_exponent(f)
    return ConjectureReport(m, conjecture_exponent(m), k_obs, th_obs)


__all__ = [
    "ci_weight", "ci_log_weight", "weight_tail", "limiting_density", "limiting_cdf",
    "ks_distance", "indeterminacy_check", "conjecture_exponent", "conjecture_check",
    "edge_x", "KAPPA_BV",
]
