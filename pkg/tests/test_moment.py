import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest
from scipy.integrate import dblquad, quad

from prasym import asympt, moment
from prasym.families import family
from prasym.specfun import DomainError

CI, BV = family("ci"), family("bv")
CF1, CF2 = family("cf1", 1), family("cf2", 1)
ALL = [CI, BV, CF1, CF2]


def test_ci_weight():
    assert moment.ci_weight(0.0) == pytest.approx(0.25)
    assert moment.ci_log_weight(7.0) == moment.ci_log_weight(-7.0)
    for x in (1e4, 1e6, 1e8):
        assert -moment.ci_log_weight(x) / (asympt.RHO_CI * math.sqrt(x / 2)) == pytest.approx(1, rel=1e-3)
    assert math.isfinite(moment.ci_log_weight(1e30))
    with pytest.raises(DomainError):
        moment.ci_log_weight(1.0, alpha=1.0)


@pytest.mark.parametrize("alpha", [0.0, 0.5, -0.9])
def test_ci_weight_vs_mpmath(alpha):
    mp.mp.dps = 30
    for x in (0.1, 2.0, 30.0, 500.0):
        u = mp.mpf(asympt.RHO_CI) * mp.sqrt(mp.mpf(x) / 2)
        cc = mp.cos(u) + mp.cosh(u)
        w = mp.sqrt(1 - alpha ** 2) * cc / (2 * (cc ** 2 - alpha ** 2 * mp.sin(u) ** 2 * mp.sinh(u) ** 2))
        assert moment.ci_log_weight(x, alpha) == pytest.approx(float(mp.log(w)), rel=1e-12, abs=1e-13)


def test_ci_weight_orthogonality():
    # F_0, F_1, F_2 are orthogonal with norms 1, 12, 12 * 240
    from prasym import families as fam

    def ip(m, n):
        g = lambda x: fam.evaluate(CI, m, x).to_float() * fam.evaluate(CI, n, x).to_float() * moment.ci_weight(x)
        return 2 * quad(g, 0, np.inf, limit=500)[0] if (m + n) % 2 == 0 else 0.0

    assert ip(0, 0) == pytest.approx(1, rel=1e-10)
    assert ip(1, 1) == pytest.approx(12, rel=1e-9)
    assert ip(2, 2) == pytest.approx(2880, rel=1e-8)
    assert abs(ip(0, 2)) < 1e-8


def test_weight_tails():
    assert moment.weight_tail(CI, 10.0).conjecture is False
    for f in (BV, CF1, CF2):
        assert moment.weight_tail(f, 10.0).conjecture is True
    # powers in the conjectured envelopes
    x1, x2 = 1e12, 2e12
    k = math.sqrt(math.pi) * math.gamma(0.25) / (2 ** 1.5 * math.gamma(0.75))
    lb = [moment.weight_tail(BV, x).log_value + k * x ** 0.25 for x in (x1, x2)]
    assert (lb[1] - lb[0]) / math.log(2) == pytest.approx(-0.5)
    c = 3
    kk = math.sqrt(math.pi) * 2 ** (1 / 3) * math.gamma(1 / 3) / (3 * math.gamma(5 / 6))
    for f, p in ((family("cf1", c), (2 * c - 1) / 3), (family("cf2", c), 2 * (c - 1) / 3)):
        lv = [moment.weight_tail(f, x).log_value + kk * x ** (1 / 3) for x in (x1, x2)]
        assert (lv[1] - lv[0]) / math.log(2) == pytest.approx(p)
    with pytest.raises(DomainError):
        moment.weight_tail(BV, -1.0)


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
def test_limiting_cdf(f):
    assert moment.limiting_cdf(f, 1.0) == 1.0
    assert moment.limiting_cdf(f, 2.0) == 1.0
    if f is CI:
        assert moment.limiting_cdf(f, 0.0) == pytest.approx(0.5)
        assert moment.limiting_cdf(f, -0.3) == pytest.approx(1 - moment.limiting_cdf(f, 0.3))
    # against double quadrature of the density
    for x in (0.1, 0.5, 0.9):
        lo = -1.0 if f is CI else 0.0
        want = quad(lambda u: moment.limiting_density(f, u), lo, x, limit=200, points=[0.0] if f is CI else None)[0]
        assert moment.limiting_cdf(f, x) == pytest.approx(want, abs=1e-7)


def test_cf1_cdf_at_half():
    q = 3
    want = dblquad(lambda s, u: 1 / (math.pi * math.sqrt(u * (s ** q - u))), 0, 0.5,
                   lambda u: u ** (1 / q), lambda u: 1.0)[0]
    assert moment.limiting_cdf(CF1, 0.5) == pytest.approx(want, abs=1e-7)


def test_ks_decreases():
    for f, lim in ((CI, 0.05), (CF1, 0.06)):
        k50, k100, k200 = (moment.ks_distance(f, n) for n in (50, 100, 200))
        assert k100 <= lim
        assert k200 <= k50


def test_conjecture_exponent():
    assert moment.conjecture_exponent(Fraction(1, 2)) == Fraction(-5, 6)
    assert moment.conjecture_exponent(Fraction(1, 4)) == Fraction(-11, 6)
    assert moment.conjecture_exponent(Fraction(1, 3)) == Fraction(-4, 3)


@pytest.mark.parametrize("f,m,k", [(CI, Fraction(1, 2), Fraction(-5, 6)), (BV, Fraction(1, 4), Fraction(-11, 6)),
                                   (CF1, Fraction(1, 3), Fraction(-4, 3)), (CF2, Fraction(1, 3), Fraction(-4, 3))],
                         ids=["CI", "BV", "CF1", "CF2"])
def test_conjecture_check(f, m, k):
    rep = moment.conjecture_check(f)
    assert rep.conjecture is True
    assert rep.m == m and rep.k_predicted == k
    assert rep.k_observed == pytest.approx(float(k), abs=0.01)
    # largest-zero growth rate approaches theta = 1/m from below
    assert 0.5 / float(m) < rep.theta_observed < 1.1 / float(m)


@pytest.mark.parametrize("f", [CI, BV, CF1], ids=lambda f: f.name)
def test_indeterminacy_summable(f):
    rep = moment.indeterminacy_check(f, 2000)
    assert rep.slope < -1.5
    assert rep.sum_ratio == pytest.approx(1, abs=0.01)


def test_indeterminacy_cf2_rate():
    # measured decay of |hat-Q_n(i)|^2 for CF-II is n^(-4/3)
    rep = moment.indeterminacy_check(CF2, 2000)
    assert rep.slope == pytest.approx(-4 / 3, abs=0.02)


def test_indeterminacy_matches_mpmath():
    mp.mp.dps = 40
    from prasym import families as fam
    f = CF1
    N = 60
    pm, pc = mp.mpc(0), mp.mpc(1)
    norm = mp.mpf(1)
    total = mp.mpf(1)
    for k in range(N):
        a, b = (int(v) for v in fam.monic_coeffs(f, k))
        pm, pc = pc, (1j - a) * pc - b * pm
        norm *= int(fam.monic_coeffs(f, k + 1)[1])
        total += abs(pc) ** 2 / norm
    got = sum(abs(fam.evaluate_orthonormal(f, n, 1j)) ** 2 for n in range(N + 1))
    assert got == pytest.approx(float(total), rel=1e-10)
