import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from genpolylog import _kernels_py, kernels

BACKENDS = kernels.available_backends()
PRIMES = [3, 5, 7, 11, 13, 101, 2**31 - 1]


def coeffs(p):
    return st.lists(st.integers(min_value=0, max_value=p - 1), max_size=12)


def _trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


@st.composite
def case(draw):
    p = draw(st.sampled_from(PRIMES))
    return p, draw(coeffs(p)), draw(coeffs(p))


def test_backend_is_reported():
    assert kernels.BACKEND in BACKENDS
    assert "python" in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")
@settings(max_examples=400, deadline=None)
@given(case(), st.integers(min_value=-5, max_value=5))
def test_backends_agree(data, k):
    p, a, b = data
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for name in ("add", "sub", "mul", "gcd"):
        assert getattr(py, name)(a, b, p) == getattr(cy, name)(a, b, p), name
    assert py.scale(a, k, p) == cy.scale(a, k, p)
    assert py.evaluate(a, k % p, p) == cy.evaluate(a, k % p, p)
    if _trim(b):
        assert py.divmod_(a, b, p) == cy.divmod_(a, b, p)


@settings(max_examples=300, deadline=None)
@given(case())
def test_division_identity(data):
    p, a, b = data
    b = _trim(b)
    if not b:
        with pytest.raises(ZeroDivisionError):
            kernels.divmod_(a, b, p)
        return
    q, r = kernels.divmod_(a, b, p)
    assert len(r) < len(b)
    assert kernels.add(kernels.mul(q, b, p), r, p) == _trim(v % p for v in a)


@settings(max_examples=300, deadline=None)
@given(case())
def test_gcd_divides_and_is_monic(data):
    p, a, b = data
    g = kernels.gcd(a, b, p)
    if not _trim(a) and not _trim(b):
        assert g == ()
        return
    assert g[-1] == 1
    assert kernels.exact_div(a, g, p) is not None
    assert kernels.exact_div(b, g, p) is not None


def test_outputs_are_trimmed_tuples():
    p = 7
    assert kernels.sub((1, 2, 3), (1, 2, 3), p) == ()
    assert kernels.add([0, 0, 0], (), p) == ()
    assert kernels.mul((1, 1), (6, 1), p) == (6, 0, 1)
    assert kernels.divmod_((0,), (0, 0, 2), 3) == ((), ())


def test_inverse():
    for p in (3, 13, 2**31 - 1):
        for a in (1, 2, p - 1):
            assert a * kernels.inverse(a, p) % p == 1
    with pytest.raises(ZeroDivisionError):
        kernels.inverse(0, 5)


def test_exact_div():
    assert kernels.exact_div((6, 0, 1), (1, 1), 7) == (6, 1)
    assert kernels.exact_div((1, 0, 1), (1, 1), 7) is None


def test_large_accumulation_no_overflow():
    p = 2**31 - 1
    a = [p - 1] * 300
    expect = _kernels_py.mul(a, a, p)
    assert kernels.mul(a, a, p) == expect


def test_pure_python_switch():
    env = dict(os.environ, POLYLOG_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from genpolylog import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_benchmark_script_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    assert bench.main(["--sizes", "4", "--repeat", "1", "--skip-macro"]) == 0
    assert "mul" in capsys.readouterr().out
