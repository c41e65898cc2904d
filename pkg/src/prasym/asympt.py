"""Plancherel-Rotach type approximants for the four families.

Every approximant returns an :class:`Approximant` holding a signed
ScaledReal value of the *natural* polynomial (F_n for ChenIsmail, Q_n for the
birth-death families) at x = nu^theta * t, together with an envelope used to
measure errors in oscillating regimes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.integrate import quad

from . import families as fam
from . import phase
from .families import FamilyKind, FamilySpec, constants
from .scaled import ScaledReal
from .specfun import (DomainError, airy, airy_ai_zero, bessel_j, bessel_y,
                      elliptic_f, gamma, log_airy_ai, log_gamma)

LOG2 = math.log(2.0)
LOGPI = math.log(math.pi)
SQRT_PI = math.sqrt(math.pi)

# growth constants of the exponential factors
KAPPA_BV = SQRT_PI * gamma(0.25) / (2 ** 2.5 * gamma(0.75))
KAPPA_CF = SQRT_PI * gamma(1 / 3) / (3 * 4 ** (1 / 3) * gamma(5 / 6))
OMEGA_CF = SQRT_PI * gamma(1 / 3) / (2 ** (2 / 3) * math.sqrt(3) * gamma(5 / 6))
RHO_CI = 2 * elliptic_f(math.pi / 2, -1.0)
RHO_BV = SQRT_PI * gamma(0.25) / gamma(0.75)
RHO_CF = SQRT_PI * gamma(1 / 3) / gamma(5 / 6)

OSC_DELTA = 0.15
AUTO_AIRY_THETA = 0.5


@dataclass(frozen=True)
class Approximant:
    value: ScaledReal
    envelope: ScaledReal
    regime: str
    n: int
    t: float
    x: float
    conjecture: bool = False
    extra: dict = field(default_factory=dict)


def _sr(sign, logabs) -> ScaledReal:
    return ScaledReal.from_log(logabs, sign)


def x_of(f: FamilySpec, n: int, t: float) -> float:
    return fam.nu(f, n) ** constants(f).theta * t


def _check_n(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError("approximants need an integer n >= 1")


# ----------------------------------------------------------------------------
# exponential (outer) region
# ----------------------------------------------------------------------------

def _q(fn, lo=0.0, hi=1.0):
    return quad(fn, lo, hi, epsabs=0.0, epsrel=1e-12, limit=200)[0]


def approx_outer_general(a: float, b: float, alpha: float, beta: float, p: float,
                         sigma: float, n: int, y: float) -> tuple[int, float]:
    """(sign, log|pi_n|) for pi_{n+1} = (x - a_n) pi_n - b_n pi_{n-1}.

    Coefficients behave like a_n ~ a n^p + alpha n^(p-1) and
    b_n ~ b^2 n^(2p) + beta n^(2p-1); x = (n + sigma)^p y with y outside
    the hull of 0 and [a - 2b, a + 2b].
    """
    _check_n(n)
    lo, hi = min(0.0, a - 2 * b), max(0.0, a + 2 * b)
    sign = 1
    if y < lo:
        # pi_n(-x; a_n, b_n) = (-1)^n pi_n(x; -a_n, b_n)
        y, a, alpha = -y, -a, -alpha
        sign = -1 if n % 2 else 1
    elif y <= hi:
        raise DomainError("y lies inside the oscillatory interval")
    b2 = b * b

    def R(r):
        return math.sqrt((y - a * r) ** 2 - 4 * b2 * r * r)

    def Rp(s):
        sp = s ** p
        return math.sqrt((y - a * sp) ** 2 - 4 * b2 * sp * sp)

    L1 = n * (p * math.log(n) - LOG2) + 0.5 * math.log(((y - a) + R(1.0)) / (2 * y))
    L2 = n * _q(lambda r: math.log((y - a * r ** p) + Rp(r)))
    L3 = _q(lambda r: a / (2 * R(r)) + (4 * b2 * r + a * (y - a * r)) / (2 * R(r) ** 2))
    L4 = _q(lambda s: p * sigma * y / Rp(s)) - _q(lambda r: alpha / (p * R(r)))
    L5 = -_q(lambda r: 2 * beta * r / (p * R(r) * ((y - a * r) + R(r))))
    return sign, L1 + L2 + L3 + L4 + L5


def _bd_params(f: FamilySpec):
    """(p, b, u, v, sigma) with lam_n ~ b(n^p + u n^(p-1)), mu_n ~ b(n^p + v n^(p-1))."""
    c = float(f.c)
    sigma = float(constants(f).tau0)
    if f.kind is FamilyKind.BERG_VALENT:
        return 4, 256.0, 2.0, 0.0, sigma
    if f.kind is FamilyKind.CF_I:
        return 3, 27.0, c + 5 / 3, c + 1 / 3, sigma
    if f.kind is FamilyKind.CF_II:
        return 3, 27.0, c + 4 / 3, c - 1 / 3, sigma
    raise DomainError("birth-death family required")


def general_params(f: FamilySpec) -> dict:
    """Arguments of approx_outer_general for a family (y in family t units)."""
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return dict(a=0.0, b=4.0, alpha=0.0, beta=0.0, p=2, sigma=0.5)
    p, b, u, v, sigma = _bd_params(f)
    return dict(a=2 * b, b=b, alpha=b * (u + v), beta=b * b * (u + v - p), p=p, sigma=sigma)


def approx_outer_birth_death(f: FamilySpec, n: int, t: float) -> tuple[int, float]:
    """(sign, log|pi_n(nu^p t)|) from the closed birth-death specialisation."""
    _check_n(n)
    p, b, u, v, sigma = _bd_params(f)
    if 0 <= t <= 4 * b:
        raise DomainError("t must lie outside [0, t_+]")
    r = 1 - 4 * b / t
    sq = math.sqrt(r)
    log_int = math.log(p) + math.log(_q(lambda s: 1.0 / math.sqrt(1 - 4 * b * s ** p / t)))
    L = (n * (math.log(abs(t)) + p * math.log(n) - p) - 0.25 * math.log(r)
         + (2 * n + (u + v) / p) * math.log((1 + sq) / 2) + (n + sigma) * math.exp(log_int))
    sign = -1 if (t < 0 and n % 2) else 1
    return sign, L


def approx_outer_ci(n: int, y: float) -> tuple[int, float]:
    """(sign, log|F_n(8 nu^2 y)|) for y > 1, elliptic-integral closed form."""
    _check_n(n)
    sign = 1
    if y < -1:
        y = -y
        sign = -1 if n % 2 else 1
    elif y <= 1:
        raise DomainError("y must satisfy |y| > 1")
    s = math.sqrt(y * y - 1)
    L = (2 * n * (math.log(2 * n) - 1) + n * math.log(y + s)
         + (2 * n + 1) * math.sqrt(y) * elliptic_f(math.asin(1 / math.sqrt(y)), -1.0)
         + 0.5 * math.log((y + s) / (2 * s)))
    return sign, L


def approx_outer(f: FamilySpec, n: int, t: float) -> Approximant:
    """Exponential-region approximant of F_n / Q_n at x = nu^theta t."""
    _check_n(n)
    if f.kind is FamilyKind.CHEN_ISMAIL:
        sign, L = approx_outer_ci(n, t / 8.0)
        val = _sr(sign, L)
    else:
        sign, L = approx_outer_birth_death(f, n, t)
        val = fam.monic_to_natural(f, n, _sr(sign, L))
    return Approximant(val, abs(val), phase.Region.OUTER_UPPER.value if t > 0 else phase.Region.OUTER_LOWER.value,
                       n, t, x_of(f, n, t))


# ----------------------------------------------------------------------------
# Airy region
# ----------------------------------------------------------------------------

def _airy_prefactor(f: FamilySpec, n: int, t: float) -> float:
    """log of everything except (-1)^n, Ai and nu^(1/6)."""
    v = fam.nu(f, n)
    c = float(f.c)
    lk = fam.log_K(f, n)
    uod = phase.U_over_delta(f, t)
    if f.kind is FamilyKind.CHEN_ISMAIL:
        # leading constant 1/(2 sqrt2 pi^1.5), checked against the recurrence
        return (lk - math.log(2 * math.sqrt(2)) - 1.5 * LOGPI
                + gamma(1.25) / gamma(0.75) * math.sqrt(math.pi * t / 2) * v
                + 0.25 * math.log(64 * uod / (t + 8)))
    if f.kind is FamilyKind.BERG_VALENT:
        return (lk + 0.5 * math.log(2 * math.pi) + math.log(v) + 0.25 * math.log(t)
                + KAPPA_BV * v * t ** 0.25 + 0.25 * math.log(uod / t))
    common = KAPPA_CF * v * t ** (1 / 3) + 0.25 * math.log(uod / t) - LOGPI
    if f.kind is FamilyKind.CF_I:
        return (lk + (c + 1) * math.log(3) + log_gamma((c + 1) / 3) + 2 * log_gamma((c + 2) / 3)
                - 7 / 6 * LOG2 - (2 * c - 1) / 2 * math.log(v) - (2 * c - 1) / 6 * math.log(t) + common)
    return (lk + (c + 0.5) * math.log(3) + 2 * log_gamma((c + 1) / 3) + log_gamma((c + 2) / 3)
            - 4 / 3 * LOG2 - (c - 1) * math.log(v) - (c - 1) / 3 * math.log(t) + common)


def approx_airy(f: FamilySpec, n: int, t: float) -> Approximant:
    """Uniform Airy approximant, valid near the largest zeros (t near t_+)."""
    _check_n(n)
    sgn_t = 1
    if f.kind is FamilyKind.CHEN_ISMAIL and t < 0:
        sgn_t = -1 if n % 2 else 1
        t = -t
    if t <= 0:
        raise DomainError("Airy approximant needs t > 0")
    v = fam.nu(f, n)
    z = v ** (2 / 3) * phase.U(f, t)
    sa, la = log_airy_ai(z)
    lp = _airy_prefactor(f, n, t) + math.log(v) / 6
    sign = sgn_t * sa * (-1 if (f.is_birth_death and n % 2) else 1)
    val = _sr(sign, lp + la) if sa else ScaledReal.zero()
    # envelope: Ai replaced by its modulus-like majorant on the oscillating side
    if z < 0:
        ai, _, bi, _ = airy(z)
        le = math.log(math.hypot(ai, bi))
    else:
        le = la
    return Approximant(val, _sr(1, lp + le), phase.Region.AIRY.value, n, t * sgn_t if sgn_t else t,
                       x_of(f, n, t), extra={"airy_argument": z})


# ----------------------------------------------------------------------------
# Bessel region (birth-death, near the origin)
# ----------------------------------------------------------------------------

def approx_bessel(f: FamilySpec, n: int, t: float, M: float | None = None) -> Approximant:
    """J/Y approximant for 0 < t <= M (default t_+/2)."""
    _check_n(n)
    if not f.is_birth_death:
        raise DomainError("Bessel approximant applies to birth-death families")
    T = constants(f).t_plus
    M = T / 2 if M is None else M
    if not 0 < t <= M:
        raise DomainError(f"Bessel approximant needs 0 < t <= {M}")
    v = fam.nu(f, n)
    c = float(f.c)
    lk = fam.log_K(f, n)
    us = phase.U_star(f, t)
    z = v * math.sqrt(us)
    x = x_of(f, n, t)
    if f.kind is FamilyKind.BERG_VALENT:
        order = 0.5
        ph = KAPPA_BV * x ** 0.25
        lp = (lk + 0.5 * LOGPI + 1.5 * math.log(v) + 0.25 * math.log(t) + KAPPA_BV * v * t ** 0.25
              + 0.25 * math.log(us / (t * (T - t))))
    else:
        ph = OMEGA_CF * x ** (1 / 3) - c * math.pi / 3
        common = KAPPA_CF * v * t ** (1 / 3) + 0.25 * math.log(us / (t * (T - t))) - LOGPI
        if f.kind is FamilyKind.CF_I:
            order = 1 / 3
            lp = (lk + (c + 1) * math.log(3) + log_gamma((c + 1) / 3) + 2 * log_gamma((c + 2) / 3)
                  + (1 - c) * math.log(v) - 5 / 3 * LOG2 - (2 * c - 1) / 6 * math.log(t) + common)
        else:
            order = 2 / 3
            lp = (lk + (c + 0.5) * math.log(3) + 2 * log_gamma((c + 1) / 3) + log_gamma((c + 2) / 3)
                  + (1.5 - c) * math.log(v) - 11 / 6 * LOG2 - (c - 1) / 3 * math.log(t) + common)
    J = bessel_j(order, z)
    Y = bessel_y(order, z)
    comb = math.sin(ph) * J - math.cos(ph) * Y
    val = _sr(1 if comb > 0 else -1, lp + math.log(abs(comb))) if comb else ScaledReal.zero()
    return Approximant(val, _sr(1, lp + math.log(math.hypot(J, Y))), phase.Region.BESSEL.value,
                       n, t, x, extra={"bessel_argument": z, "order": order})


# ----------------------------------------------------------------------------
# oscillatory region
# ----------------------------------------------------------------------------

def approx_oscillatory(f: FamilySpec, n: int, t: float, delta: float = OSC_DELTA) -> Approximant:
    """Leading oscillatory approximant for theta in [delta, pi/2 - delta]."""
    _check_n(n)
    sgn_t = 1
    if f.kind is FamilyKind.CHEN_ISMAIL and t < 0:
        sgn_t = -1 if n % 2 else 1
        t = -t
    T = constants(f).t_plus
    lo_ok = t >= 0 if f.kind is FamilyKind.CHEN_ISMAIL else t > 0
    if not (lo_ok and t < T):
        raise DomainError("oscillatory approximant needs 0 < t < t_+")
    th = phase.theta_of_t(f, t)
    if not (delta <= th <= math.pi / 2 - delta):
        raise DomainError(f"theta = {th:.4f} outside [{delta}, pi/2 - {delta}]")
    v = fam.nu(f, n)
    c = float(f.c)
    I = phase.inner_phase_integral(f, t)
    if f.kind is FamilyKind.CHEN_ISMAIL:
        le = (2 * n * (math.log(2 * n) - 1) + v * RHO_CI * math.sqrt(math.cos(th))
              - 0.5 * math.log(math.sin(th)) + 0.5 * LOG2)
        A = v * (th - I)
        osc = (math.cos(A) + math.sin(A)) / math.sqrt(2)
        lk = 0.0  # formula is for F_n directly
    elif f.kind is FamilyKind.BERG_VALENT:
        le = (0.5 * LOG2 + math.log(v) - 0.25 * math.log(T - t) + v * t ** 0.25 * 2 ** -2.5 * RHO_BV)
        osc = math.cos(math.pi / 4 - (2 * n + 0.5) * th + v * I)
        lk = fam.log_K(f, n)
    else:
        base = -1.5 * LOGPI - 0.25 * math.log(T * t - t * t) + v * (t / T) ** (1 / 3) * RHO_CF
        if f.kind is FamilyKind.CF_I:
            le = (base + (c + 1) * math.log(3) + log_gamma((c + 1) / 3) + 2 * log_gamma((c + 2) / 3)
                  - 7 / 6 * LOG2 - (2 * c - 1) / 6 * math.log(n ** 3 * t))
            osc = math.cos(math.pi / 4 - (2 * n + (2 * c + 2) / 3) * th + v * I)
        else:
            le = (base + (c + 0.5) * math.log(3) + 2 * log_gamma((c + 1) / 3) + log_gamma((c + 2) / 3)
                  - 4 / 3 * LOG2 - (c - 1) / 3 * math.log(n ** 3 * t))
            osc = math.cos(math.pi / 4 - (2 * n + (2 * c + 1) / 3) * th + v * I)
        lk = fam.log_K(f, n)
    sign = sgn_t * (1 if osc > 0 else -1) * (-1 if (f.is_birth_death and n % 2) else 1)
    val = _sr(sign, lk + le + math.log(abs(osc))) if osc else ScaledReal.zero()
    return Approximant(val, _sr(1, lk + le), phase.Region.OSCILLATORY.value, n, t * (1 if sgn_t else 1),
                       x_of(f, n, t), extra={"theta": th})


# ----------------------------------------------------------------------------
# soft edge: largest zeros and edge scaling
# ----------------------------------------------------------------------------

def _edge_scale(f: FamilySpec):
    # x = t_+ nu^theta + E s nu^(theta - 2/3)
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return 8 * 2 ** (1 / 3)
    if f.kind is FamilyKind.BERG_VALENT:
        return 1024 * 4 ** (1 / 3)
    return 54 * 18 ** (1 / 3)


def edge_x(f: FamilySpec, n: int, s: float) -> float:
    v = fam.nu(f, n)
    th = constants(f).theta
    return constants(f).t_plus * v ** th + _edge_scale(f) * s * v ** (th - 2 / 3)


def extreme_zero_prediction(f: FamilySpec, n: int, k: int = 1) -> float:
    """Predicted k-th largest zero t_+ nu^theta + E a_k nu^(theta - 2/3)."""
    return edge_x(f, n, airy_ai_zero(k))


def _edge_log_weight(f: FamilySpec, x: float) -> float:
    """log of the factor multiplying the polynomial in the edge statements."""
    c = float(f.c)
    if f.kind is FamilyKind.CHEN_ISMAIL:
        from .moment import ci_log_weight
        return 0.5 * ci_log_weight(x)
    if f.kind is FamilyKind.BERG_VALENT:
        return -0.25 * math.log(x) - KAPPA_BV * x ** 0.25
    if f.kind is FamilyKind.CF_I:
        return (2 * c - 1) / 6 * math.log(x) - KAPPA_CF * x ** (1 / 3)
    return (c - 1) / 3 * math.log(x) - KAPPA_CF * x ** (1 / 3)


def edge_constant(f: FamilySpec, n: int, orthonormal: bool = False) -> tuple[float, float]:
    """(log C, exponent k) such that the weighted edge value is C nu^k Ai(s)."""
    v = fam.nu(f, n)
    c = float(f.c)
    if orthonormal:
        if f.kind is FamilyKind.CHEN_ISMAIL:
            # 2^(-4/3), tied to the Airy prefactor above
            return -4 / 3 * LOG2, -5 / 6
        if f.kind is FamilyKind.BERG_VALENT:
            return -math.log(16 * 4 ** (1 / 3)), -11 / 6
        base = log_gamma(c + 1) - LOG2 / 3 - 5 / 3 * math.log(3)
        if f.kind is FamilyKind.CF_I:
            return base + 0.5 * math.log(c + 1), -4 / 3
        return base, -4 / 3
    lk = fam.log_K(f, n)
    if f.kind is FamilyKind.CHEN_ISMAIL:
        # 2^(-11/6) pi^(-3/2), tied to the Airy prefactor
        return lk - 11 / 6 * LOG2 - 1.5 * LOGPI, 1 / 6
    if f.kind is FamilyKind.BERG_VALENT:
        return lk + 0.5 * LOGPI - math.log(16 * 4 ** (1 / 3)), 1 / 6
    if f.kind is FamilyKind.CF_I:
        return (lk + (c - 2 / 3) * math.log(3) + log_gamma((c + 1) / 3) + 2 * log_gamma((c + 2) / 3)
                - math.log(4 * math.pi)), 1 / 6
    return (lk + (c - 7 / 6) * math.log(3) + 2 * log_gamma((c + 1) / 3) + log_gamma((c + 2) / 3)
            - math.log(4 * math.pi) - LOG2 / 6), 1 / 6


def approx_edge(f: FamilySpec, n: int, s: float, orthonormal: bool = False) -> ScaledReal:
    """Weighted edge value C nu^k Ai(s), signed like the polynomial at the edge."""
    _check_n(n)
    lc, k = edge_constant(f, n, orthonormal)
    v = fam.nu(f, n)
    sign = -1 if (f.is_birth_death and n % 2 and not orthonormal) else 1
    ai = airy(s)[0]
    if ai == 0.0:
        return ScaledReal.zero()
    return _sr(sign * (1 if ai > 0 else -1), lc + k * math.log(v) + math.log(abs(ai)))


def edge_true(f: FamilySpec, n: int, s: float, orthonormal: bool = False) -> ScaledReal:
    """Weighted edge value from the recurrence."""
    x = edge_x(f, n, s)
    if orthonormal:
        # hat-Q_n = (-1)^n Q_n sqrt(prod lam_{k-1}/mu_k) = pi_n / sqrt(prod beta_k)
        pv = fam.evaluate_orthonormal(f, n, x)
    else:
        pv = fam.evaluate(f, n, x)
    lw = _edge_log_weight(f, x)
    return pv * ScaledReal.from_log(lw)


# ----------------------------------------------------------------------------
# comparisons
# ----------------------------------------------------------------------------

REGIMES = ("outer", "airy", "bessel", "oscillatory")


def approximate(f: FamilySpec, n: int, t: float, regime: str, delta: float = OSC_DELTA) -> Approximant:
    if regime == "outer":
        return approx_outer(f, n, t)
    if regime == "airy":
        return approx_airy(f, n, t)
    if regime == "bessel":
        return approx_bessel(f, n, t)
    if regime == "oscillatory":
        return approx_oscillatory(f, n, t, delta)
    raise DomainError(f"unknown regime {regime!r}")


@dataclass(frozen=True)
class Comparison:
    regime: str
    n: int
    t: float
    approx: ScaledReal
    exact: ScaledReal
    ratio: float
    rel_dev: float


def auto_regime(f: FamilySpec, n: int, t: float) -> tuple[str, float]:
    """Regime picked from the region map, plus the oscillatory angle cut to use.

    The Airy form is uniform well into the oscillatory band, so it is kept
    for theta < AUTO_AIRY_THETA where the oscillatory form is still coarse.
    Near theta = pi/2 the Bessel form takes over for birth-death families;
    ChenIsmail has no lower turning point and keeps the oscillatory form.
    Left of the lower turning point the outer form stays accurate, so it
    is used there even inside the Bessel band.
    """
    if f.is_birth_death and t == 0:
        raise DomainError("t = 0 is the lower turning point itself; no approximant is defined there")
    region = phase.classify_region(f, n, t)
    if region in (phase.Region.OUTER_UPPER, phase.Region.OUTER_LOWER):
        return "outer", OSC_DELTA
    if region is phase.Region.BESSEL:
        return ("bessel" if t > 0 else "outer"), OSC_DELTA
    if region is phase.Region.AIRY:
        return "airy", OSC_DELTA
    th = phase.theta_of_t(f, abs(t) if f.kind is FamilyKind.CHEN_ISMAIL else t)
    if th < AUTO_AIRY_THETA:
        return "airy", OSC_DELTA
    if th > math.pi / 2 - OSC_DELTA:
        if f.is_birth_death:
            return "bessel", OSC_DELTA
        return "oscillatory", 0.0
    return "oscillatory", OSC_DELTA


def compare(f: FamilySpec, n: int, t: float, regime: str, delta: float = OSC_DELTA) -> Comparison:
    """Approximant against the recurrence at x = nu^theta t.

    ``rel_dev`` is |approx - exact| divided by the approximant's envelope, so
    it stays meaningful next to zeros of oscillating regimes; on monotone
    regimes the envelope equals |approx|.
    """
    ap = approximate(f, n, t, regime, delta)
    ex = fam.evaluate(f, n, ap.x)
    diff = ap.value - ex
    rel = abs(diff).ratio(ap.envelope) if diff.sign else 0.0
    ratio = ap.value.ratio(ex) if ex.sign else math.inf
    return Comparison(regime, n, t, ap.value, ex, ratio, rel)
