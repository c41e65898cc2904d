"""Recurrence data for the four polynomial families.

ChenIsmail polynomials obey F_{n+1} = x F_n - 4n^2(4n^2-1) F_{n-1}.  The
other three are birth-death polynomials

    -x Q_n = lam_n Q_{n+1} + mu_n Q_{n-1} - (lam_n + mu_n) Q_n,   Q_0 = 1,

with quartic (BergValent) or cubic (ConradFlajolet I/II) rates.  All of them
are rescaled to the standard form  p_{n+1} - (A_n x + B_n) p_n + p_{n-1} = 0
through a Gamma-function ratio K_n.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import numpy as np

from . import kernels
from .scaled import ScaledReal
from .specfun import log_gamma


class FamilyKind(str, enum.Enum):
    CHEN_ISMAIL = "ChenIsmail"
    BERG_VALENT = "BergValent"
    CF_I = "ConradFlajoletI"
    CF_II = "ConradFlajoletII"


_ALIASES = {
    "chenismail": FamilyKind.CHEN_ISMAIL, "ci": FamilyKind.CHEN_ISMAIL,
    "bergvalent": FamilyKind.BERG_VALENT, "bv": FamilyKind.BERG_VALENT,
    "conradflajoleti": FamilyKind.CF_I, "conradflajolet1": FamilyKind.CF_I,
    "cf1": FamilyKind.CF_I, "cfi": FamilyKind.CF_I,
    "conradflajoletii": FamilyKind.CF_II, "conradflajolet2": FamilyKind.CF_II,
    "cf2": FamilyKind.CF_II, "cfii": FamilyKind.CF_II,
}


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    """A family plus its shift parameter.

    ``c`` is only meaningful for the ConradFlajolet kinds.  By default the
    death rate at the origin is taken to be zero (no killing), so that
    Q_n(0) = 1; ``mu0_literal=True`` instead evaluates the rate formula at
    n = 0, which gives mu_0 = c^2(c+1) resp. (c-1)c^2.
    """

    kind: FamilyKind
    c: Fraction = Fraction(0)
    mu0_literal: bool = False

    def __post_init__(self):
        kind = self.kind
        if not isinstance(kind, FamilyKind):
            kind = parse_kind(kind)
            object.__setattr__(self, "kind", kind)
        c = self.c
        if isinstance(c, float):
            c = Fraction(c).limit_denominator(10 ** 9) if c == c else c
        elif isinstance(c, (int, Rational)):
            c = Fraction(c)
        else:
            raise FamilyError(f"c must be a real number, got {self.c!r}")
        object.__setattr__(self, "c", c)
        if kind in (FamilyKind.CF_I, FamilyKind.CF_II):
            if c < 0:
                raise FamilyError("ConradFlajolet families need c >= 0")
        elif c != 0:
            raise FamilyError(f"{kind.value} takes no parameter c")

    @property
    def is_birth_death(self) -> bool:
        return self.kind is not FamilyKind.CHEN_ISMAIL

    @property
    def name(self) -> str:
        if self.kind in (FamilyKind.CF_I, FamilyKind.CF_II):
            return f"{self.kind.value}(c={self.c})"
        return self.kind.value


def parse_kind(name) -> FamilyKind:
    if isinstance(name, FamilyKind):
        return name
    key = str(name).replace("-", "").replace("_", "").replace(" ", "").lower()
    if key in _ALIASES:
        return _ALIASES[key]
    raise FamilyError(f"unknown family {name!r}")


def family(kind, c=0, mu0_literal: bool = False) -> FamilySpec:
    return FamilySpec(parse_kind(kind), c, mu0_literal)


@dataclass(frozen=True)
class FamilyConstants:
    """Scaling exponent theta, edges t_-/t_+ and the index shift tau0."""

    theta: int
    t_plus: float
    t_minus: float
    tau0: Fraction
    alpha0: Fraction
    alpha1: Fraction
    beta0: Fraction | None = None
    beta1: Fraction | None = None
    beta2: Fraction | None = None


def constants(f: FamilySpec) -> FamilyConstants:
    k, c = f.kind, f.c
    if k is FamilyKind.CHEN_ISMAIL:
        return FamilyConstants(2, 8.0, -8.0, Fraction(1, 2), Fraction(1, 4), Fraction(-1, 4))
    if k is FamilyKind.BERG_VALENT:
        return FamilyConstants(4, 1024.0, 0.0, Fraction(1, 4), Fraction(1, 256), Fraction(-1, 256),
                               Fraction(-2), Fraction(0), Fraction(0))
    if k is FamilyKind.CF_I:
        return FamilyConstants(3, 108.0, 0.0, (c + 1) / 3, Fraction(1, 27), -(c + 1) / 27,
                               Fraction(-2), Fraction(0), Fraction(2, 9))
    return FamilyConstants(3, 108.0, 0.0, (2 * c + 1) / 6, Fraction(1, 27), -(2 * c + 1) / 54,
                           None, None, Fraction(5, 36))


def nu(f: FamilySpec, n) -> float:
    """Shifted index n + tau0."""
    return n + float(constants(f).tau0)


# ----------------------------------------------------------------------------
# rates and monic coefficients (exact)
# ----------------------------------------------------------------------------

def _check_n(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise FamilyError(f"index must be a non-negative integer, got {n!r}")
    return int(n)


def birth_rate(f: FamilySpec, n: int) -> Fraction:
    n = _check_n(n)
    if not f.is_birth_death:
        raise FamilyError("ChenIsmail is not a birth-death family")
    c = f.c
    if f.kind is FamilyKind.BERG_VALENT:
        return Fraction((4 * n + 1) * (4 * n + 2) ** 2 * (4 * n + 3))
    if f.kind is FamilyKind.CF_I:
        return (3 * n + c + 1) * (3 * n + c + 2) ** 2
    return (3 * n + c + 1) ** 2 * (3 * n + c + 2)


def death_rate(f: FamilySpec, n: int) -> Fraction:
    n = _check_n(n)
    if not f.is_birth_death:
        raise FamilyError("ChenIsmail is not a birth-death family")
    if n == 0 and not f.mu0_literal:
        return Fraction(0)
    c = f.c
    if f.kind is FamilyKind.BERG_VALENT:
        return Fraction((4 * n - 1) * (4 * n) ** 2 * (4 * n + 1))
    if f.kind is FamilyKind.CF_I:
        return (3 * n + c) ** 2 * (3 * n + c + 1)
    return (3 * n + c - 1) * (3 * n + c) ** 2


def monic_coeffs(f: FamilySpec, n: int) -> tuple[Fraction, Fraction]:
    """(alpha_n, beta_n) of pi_{n+1} = (x - alpha_n) pi_n - beta_n pi_{n-1}.

    beta_0 is returned as 0 (it multiplies pi_{-1} = 0).
    """
    n = _check_n(n)
    if not f.is_birth_death:
        return Fraction(0), Fraction(4 * n * n * (4 * n * n - 1))
    a = birth_rate(f, n) + death_rate(f, n)
    b = birth_rate(f, n - 1) * death_rate(f, n) if n > 0 else Fraction(0)
    return a, b


@lru_cache(maxsize=64)
def _coeff_arrays(f: FamilySpec, n: int):
    alpha = np.empty(n + 1)
    beta = np.empty(n + 1)
    lam = np.zeros(n + 1)
    for k in range(n + 1):
        a, b = monic_coeffs(f, k)
        alpha[k], beta[k] = float(a), float(b)
        if f.is_birth_death:
            lam[k] = float(birth_rate(f, k))
    for arr in (alpha, beta, lam):
        arr.setflags(write=False)
    return alpha, beta, lam


def coeff_arrays(f: FamilySpec, n: int):
    """Float arrays alpha[0..n], beta[0..n] and lam[0..n] (zeros for ChenIsmail)."""
    return _coeff_arrays(f, int(n))


@lru_cache(maxsize=64)
def _log_lambda_cumsum(f: FamilySpec, n: int):
    # log prod_{k<m} lam_k for m = 0..n
    if not f.is_birth_death:
        return np.zeros(n + 1)
    lam = coeff_arrays(f, n)[2]
    out = np.zeros(n + 1)
    out[1:] = np.cumsum(np.log(lam[:n]))
    return out


def log_prod_lambda(f: FamilySpec, n: int) -> float:
    return float(_log_lambda_cumsum(f, int(n))[int(n)]) if n > 0 else 0.0


def log_orthonormal_factor(f: FamilySpec, n: int) -> float:
    """log sqrt(prod_{k=1}^n beta_k): monic -> orthonormal divisor."""
    beta = coeff_arrays(f, max(n, 1))[1]
    return 0.5 * float(np.sum(np.log(beta[1:n + 1])))


# ----------------------------------------------------------------------------
# K_n and the standard form
# ----------------------------------------------------------------------------

def log_K(f: FamilySpec, n) -> float:
    """Natural log of the normalising Gamma ratio K_n (n may be real)."""
    k = f.kind
    lg = log_gamma
    if k is FamilyKind.CHEN_ISMAIL:
        return (4 * n * math.log(2) + 2 * lg((n + 1) / 2) + lg((n + 1.5) / 2) + lg((n + 0.5) / 2))
    if k is FamilyKind.BERG_VALENT:
        return (lg((n + 0.75) / 2) + 2 * lg((n + 1) / 2) - 2 * lg((n + 1.5) / 2) - lg((n + 1.75) / 2))
    c3 = float(f.c) / 3
    if k is FamilyKind.CF_I:
        return 2 * lg((n + c3 + 1) / 2) - 2 * lg((n + c3 + 5.0 / 3) / 2)
    return (lg((n + c3 + 2.0 / 3) / 2) + 2 * lg((n + c3 + 1) / 2)
            - 2 * lg((n + c3 + 4.0 / 3) / 2) - lg((n + c3 + 5.0 / 3) / 2))


def K(f: FamilySpec, n) -> ScaledReal:
    return ScaledReal.from_log(log_K(f, n))


def K_ratio_closed(f: FamilySpec, n: int) -> Fraction:
    """Exact K_{n+1} / K_{n-1} for n >= 1."""
    n = _check_n(n)
    if n < 1:
        raise FamilyError("ratio law needs n >= 1")
    if f.kind is FamilyKind.CHEN_ISMAIL:
        return Fraction(4 * n * n * (4 * n * n - 1))
    if f.kind is FamilyKind.BERG_VALENT:
        return Fraction((4 * n - 1) * (4 * n) ** 2, (4 * n + 2) ** 2 * (4 * n + 3))
    c = f.c
    if f.kind is FamilyKind.CF_I:
        return (3 * n + c) ** 2 / (3 * n + c + 2) ** 2
    return (3 * n + c - 1) * (3 * n + c) ** 2 / ((3 * n + c + 1) ** 2 * (3 * n + c + 2))


def standard_coeffs(f: FamilySpec, n: int) -> tuple[float, float]:
    """(A_n, B_n) of the standard form."""
    n = _check_n(n)
    r = math.exp(log_K(f, n) - log_K(f, n + 1))
    if not f.is_birth_death:
        return r, 0.0
    lam = float(birth_rate(f, n))
    mu = float(death_rate(f, n))
    return r / lam, -(lam + mu) * r / lam


@lru_cache(maxsize=64)
def _standard_arrays(f: FamilySpec, n: int):
    A = np.empty(n)
    B = np.empty(n)
    for k in range(n):
        A[k], B[k] = standard_coeffs(f, k)
    return A, B


# ----------------------------------------------------------------------------
# evaluation
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class RecurrenceTrace:
    """Values p_0..p_n as mantissa * 2**exponent arrays."""

    family: FamilySpec
    x: float
    mant: np.ndarray
    expo: np.ndarray

    @property
    def n(self) -> int:
        return len(self.mant) - 1

    def value(self, k: int | None = None) -> ScaledReal:
        k = self.n if k is None else k
        return ScaledReal.from_parts(float(self.mant[k]), int(self.expo[k]))

    def log_abs(self) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return np.log(np.abs(self.mant)) + self.expo * math.log(2)

    def signs(self) -> np.ndarray:
        return np.sign(self.mant).astype(int)


def _as_float_x(x) -> float:
    if isinstance(x, complex):
        raise FamilyError("real argument expected")
    x = float(x)
    if not math.isfinite(x):
        raise FamilyError("x must be finite")
    return x


def evaluate_standard(f: FamilySpec, n: int, x) -> RecurrenceTrace:
    """Standard-form trace, normalised so that p_0 = 1.

    The rescaled polynomial of the family is K_0 times this trace's
    ``p_n / K_n`` relation: F_n = K_n p_n / K_0 (ChenIsmail) and
    Q_n = (-1)^n K_n p_n / K_0 (birth-death).
    """
    n = _check_n(n)
    x = _as_float_x(x)
    A, B = _standard_arrays(f, n)
    mant, expo = kernels.standard_scaled(x, A, B, n)
    return RecurrenceTrace(f, x, mant, expo)


def evaluate_monic(f: FamilySpec, n: int, x) -> RecurrenceTrace:
    n = _check_n(n)
    x = _as_float_x(x)
    alpha, beta, _ = coeff_arrays(f, n)
    mant, expo = kernels.monic_scaled(x, alpha, beta, n)
    return RecurrenceTrace(f, x, mant, expo)


def monic_to_natural(f: FamilySpec, n: int, value: ScaledReal) -> ScaledReal:
    """pi_n -> F_n (ChenIsmail, identical) or Q_n (birth-death)."""
    if not f.is_birth_death:
        return value
    out = value / ScaledReal.from_log(log_prod_lambda(f, n))
    return -out if n % 2 else out


def standard_to_natural(f: FamilySpec, n: int, value: ScaledReal) -> ScaledReal:
    out = value * ScaledReal.from_log(log_K(f, n) - log_K(f, 0))
    if f.is_birth_death and n % 2:
        out = -out
    return out


def evaluate(f: FamilySpec, n: int, x) -> ScaledReal:
    """F_n(x) or Q_n(x) through the monic recurrence."""
    return monic_to_natural(f, n, evaluate_monic(f, n, x).value())


def evaluate_orthonormal(f: FamilySpec, n: int, z):
    """Orthonormal polynomial hat-P_n at z.

    Real z gives a ScaledReal; complex z gives a complex number (the
    values stay moderate off the real axis in the cases of interest).
    For birth-death families this equals (-1)^n Q_n sqrt(prod lam_{k-1}/mu_k).
    """
    n = _check_n(n)
    if isinstance(z, complex) or np.iscomplexobj(z):
        alpha, beta, _ = coeff_arrays(f, n + 1)
        boff = np.sqrt(beta)
        mant, expo = kernels.orthonormal_complex(complex(z), alpha, boff, n)
        return complex(mant[n]) * 2.0 ** int(expo[n])
    pin = evaluate_monic(f, n, z).value()
    return pin / ScaledReal.from_log(log_orthonormal_factor(f, n))


def orthonormal_complex_trace(f: FamilySpec, n: int, z: complex) -> np.ndarray:
    """hat-P_0..hat-P_n at complex z as a complex array."""
    n = _check_n(n)
    alpha, beta, _ = coeff_arrays(f, n + 1)
    mant, expo = kernels.orthonormal_complex(complex(z), alpha, np.sqrt(beta), n)
    return mant * np.exp2(expo.astype(float))


# ----------------------------------------------------------------------------
# exact oracle
# ----------------------------------------------------------------------------

EXACT_MAX_N = 40


@dataclass(frozen=True)
class ExactValue:
    monic: Fraction
    natural: Fraction  # F_n or Q_n


def evaluate_exact(f: FamilySpec, n: int, x) -> ExactValue:
    """Rational evaluation of pi_n(x) and F_n(x) / Q_n(x)."""
    n = _check_n(n)
    if n > EXACT_MAX_N:
        raise FamilyError(f"exact oracle limited to n <= {EXACT_MAX_N}")
    if isinstance(x, float):
        x = Fraction(x)
    elif not isinstance(x, (int, Rational)):
        raise FamilyError("exact oracle needs a rational argument")
    x = Fraction(x)
    pm, pc = Fraction(0), Fraction(1)
    for k in range(n):
        a, b = monic_coeffs(f, k)
        pm, pc = pc, (x - a) * pc - b * pm
    if not f.is_birth_death:
        return ExactValue(pc, pc)
    prod = Fraction(1)
    for k in range(n):
        prod *= birth_rate(f, k)
    return ExactValue(pc, pc / ((-1) ** n * prod))


def build_jacobi(f: FamilySpec, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal alpha_0..alpha_{n-1} and off-diagonal sqrt(beta_1..beta_{n-1})."""
    n = _check_n(n)
    if n < 1:
        raise FamilyError("Jacobi matrix needs n >= 1")
    alpha, beta, _ = coeff_arrays(f, n)
    return np.array(alpha[:n]), np.sqrt(beta[1:n])
