import math
from fractions import Fraction

import numpy as np
import pytest

from prasym import asympt, families as fam, phase
from prasym.families import family
from prasym.specfun import DomainError, airy

CI, BV = family("ci"), family("bv")
CF1, CF2 = family("cf1", 1), family("cf2", 1)
ALL = [CI, BV, CF1, CF2]
BD = [BV, CF1, CF2]


def _log_exact_monic(f, n, x):
    v = fam.evaluate_exact(f, n, Fraction(x)).monic
    return math.log(abs(v.numerator)) - math.log(v.denominator), (1 if v > 0 else -1)


def test_outer_ci_against_oracle():
    n, y = 30, 3.0
    x = 8 * fam.nu(CI, n) ** 2 * y
    sign, L = asympt.approx_outer_ci(n, y)
    le, se = _log_exact_monic(CI, n, x)
    assert sign == se
    assert math.exp(L - le) == pytest.approx(1, abs=0.02)


def test_outer_bv_against_oracle():
    n, t = 30, 2048.0
    x = fam.nu(BV, n) ** 4 * t
    sign, L = asympt.approx_outer_birth_death(BV, n, t)
    le, se = _log_exact_monic(BV, n, x)
    assert sign == se
    assert math.exp(L - le) == pytest.approx(1, abs=0.05)


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
@pytest.mark.parametrize("frac", [-3.0, -0.2, 1.3, 2.0, 10.0])
def test_general_outer_form_specialises(f, frac):
    # the general exponential-region form reduces to the family closed forms
    T = fam.constants(f).t_plus
    t = frac * T
    if f is CI and abs(frac) <= 1:
        return
    gp = asympt.general_params(f)
    for n in (10, 60, 250):
        s1, l1 = asympt.approx_outer_general(n=n, y=t, **gp)
        s2, l2 = asympt.approx_outer_ci(n, t / 8) if f is CI else asympt.approx_outer_birth_death(f, n, t)
        assert s1 == s2
        assert l1 == pytest.approx(l2, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
def test_outer_error_decreases(f):
    T = fam.constants(f).t_plus
    errs = [asympt.compare(f, n, 2.5 * T, "outer").rel_dev for n in (20, 80, 320)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 0.01


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
def test_airy_at_and_around_turning_point(f):
    T = fam.constants(f).t_plus
    for n in (30, 100):
        for d in (-3e-3, 0.0, 3e-3):
            assert asympt.compare(f, n, T * (1 + d), "airy").rel_dev < 0.02


def test_airy_ci_example():
    assert asympt.compare(CI, 50, 8.0, "airy").ratio == pytest.approx(1, abs=0.1)


@pytest.mark.parametrize("f", BD, ids=lambda f: f.name)
def test_bessel(f):
    T = fam.constants(f).t_plus
    for t in (1e-3 * T, 0.05 * T, 0.3 * T):
        assert asympt.compare(f, 80, t, "bessel").rel_dev < 0.01
    with pytest.raises(DomainError):
        asympt.approx_bessel(f, 80, -1.0)


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
def test_oscillatory_window(f):
    for th in np.linspace(0.5, math.pi / 2 - asympt.OSC_DELTA, 6):
        t = phase.t_of_theta(f, th)
        assert asympt.compare(f, 150, t, "oscillatory").rel_dev < 0.03
    # near the upper turning point the leading form converges slowly but does converge
    t = phase.t_of_theta(f, asympt.OSC_DELTA)
    errs = [asympt.compare(f, n, t, "oscillatory").rel_dev for n in (50, 150, 600)]
    assert errs[0] > errs[1] > errs[2]
    with pytest.raises(DomainError):
        asympt.approx_oscillatory(f, 50, phase.t_of_theta(f, 0.01))


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
def test_airy_uniform_into_oscillatory_band(f):
    for th in (0.15, 0.3, 0.5, 0.8):
        assert asympt.compare(f, 50, phase.t_of_theta(f, th), "airy").rel_dev < 1e-3


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
def test_auto_regime_never_refuses(f):
    T = fam.constants(f).t_plus
    lo = -1.2 * T if f is CI else -0.5 * T
    for t in np.linspace(lo, 1.5 * T, 41):
        if f is CI and abs(t) < 0.05 * T:
            continue  # x = O(1) boundary layer of the leading ChenIsmail form
        if t == 0:
            with pytest.raises(DomainError):
                asympt.auto_regime(f, 80, t)
            continue
        regime, delta = asympt.auto_regime(f, 80, t)
        assert asympt.compare(f, 80, t, regime, delta).rel_dev < 0.05


def test_edge_value_ci():
    n = 50
    ap, ex = asympt.approx_edge(CI, n, 0.0), asympt.edge_true(CI, n, 0.0)
    assert ap.ratio(ex) == pytest.approx(1, abs=0.01)
    # reduces to Ai(0) after removing the prefactor
    lc, k = asympt.edge_constant(CI, n)
    got = ex.log() - lc - k * math.log(fam.nu(CI, n))
    assert math.exp(got) == pytest.approx(airy(0.0)[0], rel=0.01)


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
@pytest.mark.parametrize("orth", [False, True])
def test_edge_values(f, orth):
    # O(nu^(-2/3)) convergence; s = -2 sits next to the first Airy zero
    for s in (-2.0, -1.0, 0.5, 1.5):
        e = []
        for n in (60, 480):
            ap = asympt.approx_edge(f, n, s, orthonormal=orth)
            ex = asympt.edge_true(f, n, s, orthonormal=orth)
            assert ap.sign == ex.sign
            e.append(abs(ap.ratio(ex) - 1))
        assert e[1] < e[0] / 2.5
    for n in (60, 480):
        assert asympt.approx_edge(f, n, 0.0, orth).ratio(asympt.edge_true(f, n, 0.0, orth)) == pytest.approx(1, abs=1e-3)


def test_extreme_zero_prediction_examples():
    n = 40
    v = n + 0.5
    assert asympt.extreme_zero_prediction(CI, n) == pytest.approx(
        8 * v ** 2 + 8 * 2 ** (1 / 3) * -2.338107410459767 * v ** (4 / 3), rel=1e-12)
    v = n + 0.25
    assert asympt.extreme_zero_prediction(BV, n) == pytest.approx(
        1024 * v ** 4 + 1024 * 4 ** (1 / 3) * -2.338107410459767 * v ** (10 / 3), rel=1e-12)


def test_unknown_regime():
    with pytest.raises(DomainError):
        asympt.approximate(CI, 10, 1.0, "wkb")
