"""Special functions used by the phase maps and the approximants.

Everything here is real-argument only and written from the classical series,
asymptotic expansions and continued fractions.
"""
from __future__ import annotations

import math

SQRT_PI = math.sqrt(math.pi)
_AI0 = 0.355028053887817239260063186004183176397979174199
_AIP0 = 0.258819403792806798405183560189203963479091138354  # -Ai'(0)

_STIRLING = (1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
             -691.0 / 360360, 1.0 / 156, -3617.0 / 122400)


class DomainError(ValueError):
    """Argument outside the documented domain of a function."""


# ----------------------------------------------------------------------------
# Gamma
# ----------------------------------------------------------------------------

def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    x = float(x)
    if not x > 0 or not math.isfinite(x):
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    shift = 0.0
    if x < 12.0:
        prod = 1.0
        while x < 12.0:
            prod *= x
            x += 1.0
        shift = math.log(prod)
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    p = inv
    for c in _STIRLING:
        corr += c * p
        p *= inv2
    return (x - 0.5) * math.log(x) - x + 0.5 * math.log(2 * math.pi) + corr - shift


def gamma(x: float) -> float:
    """Gamma function for real non-pole arguments."""
    x = float(x)
    if x > 0:
        return math.exp(log_gamma(x))
    if x == math.floor(x):
        raise DomainError("gamma has a pole at non-positive integers")
    # reflection
    return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))


def beta(a: float, b: float) -> float:
    return math.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b))


# ----------------------------------------------------------------------------
# Airy functions
# ----------------------------------------------------------------------------

_U = [1.0]
for _k in range(1, 60):
    _U.append(_U[-1] * (6 * _k - 5) * (6 * _k - 3) * (6 * _k - 1) / ((2 * _k - 1) * 216.0 * _k))
_V = [1.0] + [-(6 * k + 1) / (6 * k - 1) * _U[k] for k in range(1, 60)]


def _airy_maclaurin(x):
    x3 = x * x * x
    f = g = 0.0
    t, s = 1.0, x
    fp, gp = 0.0, 1.0
    u, v = x * x / 2.0, 1.0
    k = 0
    while True:
        f += t
        g += s
        if k > 0:
            gp += v
        fp += u if k == 0 else 0.0
        k += 1
        t *= x3 / ((3 * k - 1) * (3 * k))
        s *= x3 / ((3 * k) * (3 * k + 1))
        v *= x3 / ((3 * k - 2) * (3 * k))
        if k > 1:
            u *= x3 / ((3 * k - 3) * (3 * k - 1))
            fp += u
        if max(abs(t), abs(s), abs(u), abs(v)) < 1e-18 * max(abs(f), abs(g), abs(fp), abs(gp), 1e-300) and k > 3:
            break
        if k > 400:
            break
    ai = _AI0 * f - _AIP0 * g
    aip = _AI0 * fp - _AIP0 * gp
    bi = math.sqrt(3.0) * (_AI0 * f + _AIP0 * g)
    bip = math.sqrt(3.0) * (_AI0 * fp + _AIP0 * gp)
    return ai, aip, bi, bip


def _asym_sum(coef, zeta, alternating):
    # optimal truncation of sum_k (+-1)^k coef_k zeta^-k
    total = 0.0
    prev = math.inf
    p = 1.0
    for k, c in enumerate(coef):
        term = c * p
        if abs(term) > prev:
            break
        total += -term if (alternating and k % 2) else term
        prev = abs(term)
        if prev < 1e-17 * abs(total):
            break
        p /= zeta
    return total


def _osc_sums(coef, zeta):
    # P = sum (-1)^k c_{2k} z^-2k, Q = sum (-1)^k c_{2k+1} z^-(2k+1)
    P = Q = 0.0
    prev = math.inf
    p = 1.0
    for k, c in enumerate(coef):
        term = c * p
        if abs(term) > prev:
            break
        sgn = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            P += sgn * term
        else:
            Q += sgn * term
        prev = abs(term)
        if prev < 1e-17:
            break
        p /= zeta
    return P, Q


def _airy_pos_asym_scaled(x):
    """(e^z Ai, e^z Ai', e^-z Bi, e^-z Bi', zeta) for large positive x."""
    zeta = 2.0 / 3.0 * x * math.sqrt(x)
    q = x ** 0.25
    ai = _asym_sum(_U, zeta, True) / (2 * SQRT_PI * q)
    aip = -q * _asym_sum(_V, zeta, True) / (2 * SQRT_PI)
    bi = _asym_sum(_U, zeta, False) / (SQRT_PI * q)
    bip = q * _asym_sum(_V, zeta, False) / SQRT_PI
    return ai, aip, bi, bip, zeta


def _airy_neg_asym(x):
    # x < 0
    y = -x
    zeta = 2.0 / 3.0 * y * math.sqrt(y)
    q = y ** 0.25
    P, Q = _osc_sums(_U, zeta)
    Pv, Qv = _osc_sums(_V, zeta)
    c, s = math.cos(zeta - math.pi / 4), math.sin(zeta - math.pi / 4)
    ai = (c * P + s * Q) / (SQRT_PI * q)
    bi = (-s * P + c * Q) / (SQRT_PI * q)
    aip = q * (s * Pv - c * Qv) / SQRT_PI
    bip = q * (c * Pv + s * Qv) / SQRT_PI
    return ai, aip, bi, bip


def _taylor_step(x0, y, yp, target, h=0.5):
    """Integrate y'' = x y from x0 to target by Taylor steps."""
    x = x0
    while x != target:
        step = target - x
        if abs(step) > h:
            step = math.copysign(h, step)
        coeffs = [y, yp]
        val = y
        j = 0
        while True:
            cn = (x * coeffs[j] + (coeffs[j - 1] if j >= 1 else 0.0)) / ((j + 1) * (j + 2))
            coeffs.append(cn)
            j += 1
            if j > 80 or (abs(cn) * abs(step) ** (j + 1) < 1e-18 * (abs(val) + 1e-300) and j > 6):
                break
        val = 0.0
        der = 0.0
        for i in range(len(coeffs) - 1, -1, -1):
            val = val * step + coeffs[i]
        for i in range(len(coeffs) - 1, 0, -1):
            der = der * step + i * coeffs[i]
        y, yp = val, der
        x = x + step if abs(target - (x + step)) > 1e-15 else target
    return y, yp


_SERIES_R = 4.5
_ASYM_R = 8.0


def airy(x: float):
    """(Ai, Ai', Bi, Bi') at real x."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("airy needs a finite argument")
    if abs(x) <= _SERIES_R:
        return _airy_maclaurin(x)
    if x >= _ASYM_R:
        ai, aip, bi, bip, z = _airy_pos_asym_scaled(x)
        e = math.exp(-z) if z < 745 else 0.0
        E = math.exp(z) if z < 709 else math.inf
        return ai * e, aip * e, bi * E, bip * E
    if x <= -_ASYM_R:
        return _airy_neg_asym(x)
    if x > 0:
        a8, ap8, _, _, z = _airy_pos_asym_scaled(_ASYM_R)
        ai, aip = _taylor_step(_ASYM_R, a8 * math.exp(-z), ap8 * math.exp(-z), x)
        _, _, bi, bip = _airy_maclaurin(x)
        return ai, aip, bi, bip
    a, ap, b, bp = _airy_neg_asym(-_ASYM_R)
    ai, aip = _taylor_step(-_ASYM_R, a, ap, x)
    bi, bip = _taylor_step(-_ASYM_R, b, bp, x)
    return ai, aip, bi, bip


def airy_ai(x: float) -> float:
    return airy(x)[0]


def log_airy_ai(x: float):
    """(sign, log|Ai(x)|), usable far beyond the float range of Ai."""
    x = float(x)
    if x >= _ASYM_R:
        ai, _, _, _, z = _airy_pos_asym_scaled(x)
        return 1, math.log(ai) - z
    ai = airy(x)[0]
    if ai == 0.0:
        return 0, -math.inf
    return (1 if ai > 0 else -1), math.log(abs(ai))


def airy_ai_zero(k: int) -> float:
    """k-th zero a_k of Ai (k = 1, 2, ...)."""
    if k < 1:
        raise DomainError("zero index starts at 1")
    t = 3 * math.pi * (4 * k - 1) / 8
    x = -t ** (2.0 / 3.0) * (1 + 5.0 / 48 * t ** -2 - 5.0 / 36 * t ** -4 + 77125.0 / 82944 * t ** -6)
    for _ in range(50):
        ai, aip, _, _ = airy(x)
        dx = ai / aip
        x -= dx
        if abs(dx) < 1e-15 * abs(x):
            break
    return x


# ----------------------------------------------------------------------------
# Bessel functions of fractional order
# ----------------------------------------------------------------------------

def _bessel_series(alpha, x):
    h = 0.5 * x
    # log of the first term, avoids overflow in (x/2)^alpha / Gamma
    g = gamma(alpha + 1.0)
    term = math.exp(alpha * math.log(h)) / g
    total = term
    k = 0
    h2 = h * h
    while True:
        k += 1
        term *= -h2 / (k * (k + alpha))
        total += term
        if abs(term) < 1e-18 * abs(total) and k > 2:
            break
        if k > 1000:
            break
    return total


def _hankel(alpha, x):
    mu = 4.0 * alpha * alpha
    a = 1.0
    P = 1.0
    Q = 0.0
    prev = math.inf
    for k in range(1, 200):
        a *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(a) > prev or a == 0.0:
            break
        prev = abs(a)
        r = k % 4
        if r == 1:
            Q += a
        elif r == 2:
            P -= a
        elif r == 3:
            Q -= a
        else:
            P += a
        if prev < 1e-17:
            break
    chi = x - (0.5 * alpha + 0.25) * math.pi
    amp = math.sqrt(2.0 / (math.pi * x))
    return (amp * (P * math.cos(chi) - Q * math.sin(chi)),
            amp * (P * math.sin(chi) + Q * math.cos(chi)))


def _check_bessel(alpha, x):
    if alpha == math.floor(alpha):
        raise DomainError("integer orders are not supported")
    if not x > 0 or not math.isfinite(x):
        raise DomainError("Bessel functions need x > 0")


def _use_series(alpha, x):
    return x <= max(12.0, 2.0 * abs(alpha))


def bessel_j(alpha: float, x: float) -> float:
    """J_alpha(x), non-integer alpha, x > 0."""
    alpha, x = float(alpha), float(x)
    _check_bessel(alpha, x)
    if _use_series(alpha, x):
        return _bessel_series(alpha, x)
    return _hankel(alpha, x)[0]


def bessel_y(alpha: float, x: float) -> float:
    """Y_alpha(x) via the connection formula (series range) or Hankel."""
    alpha, x = float(alpha), float(x)
    _check_bessel(alpha, x)
    if _use_series(abs(alpha), x):
        s = math.sin(alpha * math.pi)
        return (_bessel_series(alpha, x) * math.cos(alpha * math.pi) - _bessel_series(-alpha, x)) / s
    return _hankel(alpha, x)[1]


# ----------------------------------------------------------------------------
# Elliptic integral, incomplete beta, 2F1
# ----------------------------------------------------------------------------

def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson's R_F by the duplication theorem."""
    if min(x, y, z) < 0 or (x + y == 0) or (x + z == 0) or (y + z == 0):
        raise DomainError("carlson_rf needs non-negative args with at most one zero")
    for _ in range(100):
        lam = math.sqrt(x * y) + math.sqrt(y * z) + math.sqrt(z * x)
        x, y, z = 0.25 * (x + lam), 0.25 * (y + lam), 0.25 * (z + lam)
        mu = (x + y + z) / 3.0
        dx, dy, dz = 1 - x / mu, 1 - y / mu, 1 - z / mu
        if max(abs(dx), abs(dy), abs(dz)) < 1e-4:
            break
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44) / math.sqrt(mu)


def elliptic_f(phi: float, m: float) -> float:
    """Incomplete elliptic integral of the first kind F(phi | m), |phi| <= pi/2."""
    if abs(phi) > math.pi / 2 + 1e-15:
        raise DomainError("elliptic_f needs |phi| <= pi/2")
    s = math.sin(phi)
    c = math.cos(phi)
    if 1 - m * s * s <= 0:
        raise DomainError("elliptic_f needs 1 - m sin^2 phi > 0")
    return s * carlson_rf(c * c, 1 - m * s * s, 1.0)


def _betacf(a, b, x):
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    d = tiny if abs(d) < tiny else d
    d = 1.0 / d
    h = d
    for m in range(1, 1000):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        d = tiny if abs(d) < tiny else d
        c = 1.0 + aa / c
        c = tiny if abs(c) < tiny else c
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        d = tiny if abs(d) < tiny else d
        c = 1.0 + aa / c
        c = tiny if abs(c) < tiny else c
        d = 1.0 / d
        de = d * c
        h *= de
        if abs(de - 1.0) < 1e-16:
            break
    return h


def beta_inc(x: float, a: float, b: float) -> float:
    """Non-regularised incomplete beta  int_0^x y^(a-1) (1-y)^(b-1) dy."""
    x = float(x)
    if not (0.0 <= x <= 1.0) or a <= 0 or b <= 0:
        raise DomainError("beta_inc needs 0 <= x <= 1 and a, b > 0")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return beta(a, b)
    if x < (a + 1.0) / (a + b + 2.0):
        return math.exp(a * math.log(x) + b * math.log1p(-x)) / a * _betacf(a, b, x)
    return beta(a, b) - math.exp(b * math.log1p(-x) + a * math.log(x)) / b * _betacf(b, a, 1.0 - x)


_HYP = {"BV": 0.25, "CF": 1.0 / 6.0}


def hyp2f1_special(which: str, z: float) -> float:
    """2F1(b, 1/2; b+1; z) for b = 1/4 ("BV") or b = 1/6 ("CF"), z <= 1/2."""
    if which not in _HYP:
        raise DomainError(f"unknown hypergeometric case {which!r}")
    b = _HYP[which]
    z = float(z)
    if z > 0.5:
        raise DomainError("hyp2f1_special is implemented for z <= 1/2")
    if abs(z) <= 0.5:
        term, total, k = 1.0, 1.0, 0
        while abs(term) > 1e-18 * abs(total):
            term *= (b + k) * (0.5 + k) / (b + 1 + k) / (k + 1) * z
            total += term
            k += 1
        return total
    # int_0^1 u^(b-1) (1 - z u)^(-1/2) du in incomplete-beta form
    w = -z / (1.0 - z)
    return b * (-z) ** (-b) * beta_inc(w, b, 0.5 - b)
