import json
import os
import subprocess
import sys

import numpy as np
import pytest

from prasym import _accel, families as fam, kernels
from prasym.families import family

jit_only = pytest.mark.skipif(not _accel.NUMBA_ENABLED, reason="numba disabled")
ALL = [family("ci"), family("bv"), family("cf1", 1), family("cf2", 1)]


@jit_only
@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
def test_jit_matches_python(f):
    a, b, _ = fam.coeff_arrays(f, 400)
    for x in (-5.0, 0.0, 123.4, 1e9):
        m1, e1 = kernels.monic_scaled(x, a, b, 400)
        m2, e2 = kernels.monic_scaled.py_func(x, a, b, 400)
        assert np.array_equal(e1, e2)
        assert np.allclose(m1, m2, rtol=1e-15, atol=0)
    off = np.sqrt(b)
    z1 = kernels.orthonormal_complex(1j, a, off, 400)
    z2 = kernels.orthonormal_complex.py_func(1j, a, off, 400)
    assert np.allclose(z1, z2, rtol=1e-14)


@jit_only
def test_bisection_routes_agree():
    f = family("bv")
    d, e = fam.build_jacobi(f, 120)
    off2 = e * e
    lo, hi = -1.0, float(np.max(np.abs(d)) + 2 * np.max(e)) * 1.01
    pivmin = 1e-300
    r1 = kernels._bisect_jit(d, off2, lo, hi, 1e-14, 0.0, pivmin, 200)
    r2 = kernels._bisect_numpy(d, off2, lo, hi, 1e-14, 0.0, pivmin, 200)
    for u, v in zip(r1, r2):
        assert np.allclose(u, v, rtol=1e-13)


def test_sturm_count_small():
    d = np.array([0.0, 0.0])
    off2 = np.array([12.0])
    s = kernels.sturm_count.py_func if hasattr(kernels.sturm_count, "py_func") else kernels.sturm_count
    assert s(d, off2, 0.0, 1e-300) == 1
    assert s(d, off2, 4.0, 1e-300) == 2
    assert s(d, off2, -4.0, 1e-300) == 0


_PROBE = r"""
import json
from prasym import _accel, families as fam, zeros, acceptance
from prasym.families import family
out = {"numba": _accel.NUMBA_ENABLED, "vals": [], "zeros": []}
for f in (family("ci"), family("bv"), family("cf1", 1), family("cf2", 1)):
    out["vals"].append(fam.evaluate(f, 300, 777.0).log())
    out["zeros"].append(list(map(float, zeros.compute_zeros(f, 40).zeros)))
out["c3"] = acceptance.c3_zero_bounds().passed
print(json.dumps(out))
"""


def _probe(disable):
    env = dict(os.environ)
    env["PRASYM_DISABLE_NUMBA"] = "1" if disable else "0"
    r = subprocess.run([sys.executable, "-c", _PROBE], env=env, capture_output=True, text=True, timeout=300)
    assert r.returncode == 0, r.stderr
    return json.loads(r.stdout)


def test_fallback_matches_accelerated():
    slow, fast = _probe(True), _probe(False)
    assert slow["numba"] is False
    assert slow["c3"] and fast["c3"]
    assert np.allclose(slow["vals"], fast["vals"], rtol=1e-13)
    for a, b in zip(slow["zeros"], fast["zeros"]):
        assert np.allclose(a, b, rtol=1e-12)
