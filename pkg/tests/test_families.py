import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from prasym import families as fam
from prasym.families import family

CI, BV = family("ci"), family("bv")
CF1, CF2 = family("cf1", 1), family("cf2", 1)
ALL = [CI, BV, CF1, CF2]


def test_rates():
    assert fam.birth_rate(BV, 0) == 12
    assert fam.birth_rate(BV, 1) == 1260
    assert fam.death_rate(BV, 0) == 0
    assert fam.death_rate(BV, 1) == 240
    assert fam.birth_rate(CF1, 0) == 18
    assert fam.death_rate(family("cf1", 1, mu0_literal=True), 0) == 2
    assert fam.death_rate(CF1, 0) == 0


def test_family_names_and_errors():
    assert fam.parse_kind("conrad-flajolet-2") is fam.FamilyKind.CF_II
    assert fam.parse_kind("Chen-Ismail") is fam.FamilyKind.CHEN_ISMAIL
    with pytest.raises(fam.FamilyError):
        fam.parse_kind("hermite")
    with pytest.raises(fam.FamilyError):
        family("bv", 2)
    with pytest.raises((fam.FamilyError, ValueError)):
        fam.birth_rate(BV, -1)


def test_monic_coeffs():
    assert fam.monic_coeffs(CI, 1) == (0, 12)
    assert fam.monic_coeffs(BV, 1) == (1500, 2880)
    assert fam.monic_coeffs(CF1, 1) == (260, 1440)
    assert fam.monic_coeffs(BV, 0)[1] == 0


def test_K0_and_large_n():
    k0 = math.exp(fam.log_K(CI, 0))
    assert k0 == pytest.approx(math.pi * math.gamma(0.75) * math.gamma(0.25), rel=1e-13)
    assert k0 == pytest.approx(13.9577, abs=1e-4)
    n = 1e6
    assert math.exp(fam.log_K(BV, n)) * (n + 0.25) / 2 == pytest.approx(1, abs=1e-5)
    assert math.exp(fam.log_K(CF1, n)) * n ** (2 / 3) / 2 ** (2 / 3) == pytest.approx(1, abs=1e-5)


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
def test_K_ratio_law(f):
    for n in range(1, 201):
        got = math.exp(fam.log_K(f, n + 1) - fam.log_K(f, n - 1))
        assert got == pytest.approx(float(fam.K_ratio_closed(f, n)), rel=1e-12)


def test_standard_coeff_limits():
    assert all(fam.standard_coeffs(CI, n)[1] == 0 for n in range(50))
    assert fam.standard_coeffs(BV, 4000)[0] * 4000 ** 4 == pytest.approx(1 / 256, rel=1e-3)
    assert fam.standard_coeffs(CF2, 100000)[1] == pytest.approx(-2, rel=1e-4)


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
def test_A_n_first_order(f):
    # slope of log(A_n n^theta / alpha0 - 1) against log n should be -1, with the alpha1 constant
    c = fam.constants(f)
    ns = np.arange(100, 1001, 50)
    dev = [fam.standard_coeffs(f, int(n))[0] * n ** c.theta / float(c.alpha0) - 1 for n in ns]
    fit = np.polyfit(np.log(ns), np.log(np.abs(dev)), 1)
    assert fit[0] == pytest.approx(-1, abs=0.05)
    assert dev[-1] * ns[-1] == pytest.approx(float(c.alpha1 / c.alpha0), rel=0.05)


def test_closed_forms():
    assert fam.evaluate(CI, 3, 1.0).to_float() == pytest.approx(-251)
    assert fam.evaluate(CI, 2, 0.0).to_float() == pytest.approx(-12)
    assert fam.evaluate(BV, 1, 0.0).to_float() == pytest.approx(1)
    assert fam.evaluate_exact(family("cf1", 1, mu0_literal=True), 1, 20).natural == 0
    for f in ALL:
        assert fam.evaluate(f, 0, 7.0).to_float() == 1
        assert fam.evaluate_standard(f, 0, 3.0).value().to_float() == 1


def test_orthonormal():
    assert fam.evaluate_orthonormal(CI, 2, 0.0).to_float() == pytest.approx(-12 / math.sqrt(2880), rel=1e-14)
    assert fam.evaluate_orthonormal(CI, 0, 3.0).to_float() == 1


def test_orthonormal_complex_matches_exact():
    for f in ALL:
        z = 1j
        for n in (1, 5, 20):
            mp.mp.dps = 40
            pm, pc = mp.mpc(0), mp.mpc(1)
            for k in range(n):
                a, b = (int(v) for v in fam.monic_coeffs(f, k))
                pm, pc = pc, (z - a) * pc - b * pm
            norm = mp.sqrt(mp.fprod(mp.mpf(int(fam.monic_coeffs(f, k)[1])) for k in range(1, n + 1)))
            want = complex(pc / norm)
            got = fam.evaluate_orthonormal(f, n, z)
            assert abs(got - want) <= 1e-12 * abs(want)


def test_huge_values_do_not_overflow():
    v = fam.evaluate(BV, 2000, 1e12)
    assert v.sign != 0 and math.isfinite(v.log())
    assert v.log10() > 308


def _abs_recurrence(f, n, x):
    """Recurrence run on absolute values: bounds the rounding amplification."""
    pm, pc = Fraction(0), Fraction(1)
    for k in range(n):
        a, b = fam.monic_coeffs(f, k)
        pm, pc = pc, abs(x - a) * pc + b * pm
    return pc


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(ALL), st.integers(1, 30), st.fractions(min_value=-2000, max_value=20000, max_denominator=50))
def test_monic_matches_exact(f, n, x):
    ex = fam.evaluate_exact(f, n, x).monic
    got = fam.evaluate_monic(f, n, float(x)).value()
    scale = _abs_recurrence(f, n, x)
    err = abs(got - fam.ScaledReal.from_float(float(ex))) if abs(ex) < 1e300 else None
    if err is None:
        return
    assert err.to_float() <= 1e-13 * n * float(scale)


def test_standard_and_monic_routes_agree():
    # two independent recurrences for the same polynomial
    for f in ALL:
        for x in (-3.5, 0.25, 17.0, 1e4):
            for n in (1, 7, 40, 300):
                a = fam.standard_to_natural(f, n, fam.evaluate_standard(f, n, x).value())
                b = fam.monic_to_natural(f, n, fam.evaluate_monic(f, n, x).value())
                assert abs(a - b).ratio(abs(b)) < 1e-9


def test_jacobi():
    d, o = fam.build_jacobi(BV, 2)
    assert list(d) == [12, 1500]
    assert o[0] == pytest.approx(math.sqrt(2880))
    d, o = fam.build_jacobi(CI, 2)
    assert list(d) == [0, 0] and o[0] == pytest.approx(math.sqrt(12))
    assert sorted(np.linalg.eigvalsh(np.diag(d) + np.diag(o, 1) + np.diag(o, -1))) == pytest.approx([-math.sqrt(12), math.sqrt(12)])


def test_exact_oracle_limits():
    with pytest.raises(fam.FamilyError):
        fam.evaluate_exact(CI, fam.EXACT_MAX_N + 1, 1)
    with pytest.raises(fam.FamilyError):
        fam.evaluate_exact(CI, 3, "x")
