import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mpf

from moebius.errors import CapacityError, DomainError, UnsupportedKernelError
from moebius.identities import mu_power_sum
from moebius.piecewise import (EndpointContext, FunctionSpec, InnerSumFactor,
                               Partition, PowLogSum, integrate_m_kernel)
from moebius.summatory import summatory


def test_powlog_antiderivative_vs_quad():
    f = PowLogSum.monomial(mpf(2), mpmath.mpc(0.5, 1.0), 2)
    f.add_monomial(mpf(3), mpf(-1), 1)
    F = f.antiderivative()
    va, _ = F.eval_with_scale(EndpointContext(mpf(2)))
    vb, _ = F.eval_with_scale(EndpointContext(mpf(5)))
    ref = mpmath.quad(lambda t: 2 * t**mpmath.mpc(0.5, 1) * mpmath.log(t) ** 2
                      + 3 * mpmath.log(t) / t, [2, 5])
    assert abs((vb - va) - ref) < 1e-24


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=-2.5, max_value=2.5), st.integers(min_value=0, max_value=3),
       st.floats(min_value=1.2, max_value=9.0), st.floats(min_value=0.05, max_value=3.0))
def test_powlog_antiderivative_random(p, k, a, width):
    f = PowLogSum.monomial(mpf(1), mpf(p), k)
    F = f.antiderivative()
    va, _ = F.eval_with_scale(EndpointContext(mpf(a)))
    vb, _ = F.eval_with_scale(EndpointContext(mpf(a + width)))
    ref = mpmath.quad(lambda t: t**mpf(p) * mpmath.log(t) ** k, [a, a + width])
    assert abs((vb - va) - ref) < 1e-20


def test_partition_structure():
    part = Partition(10.0)
    pts = [float(p) for p in part.points]
    assert pts[0] == 1.0 and pts[-1] == 10.0
    for n in range(1, 11):
        assert any(abs(p - n) < 1e-12 for p in pts)
        assert any(abs(p - 10.0 / n) < 1e-12 for p in pts)
    # floor(t) and floor(x/t) constant inside each piece
    for a, b, N, K in part.pieces():
        for lam in (0.25, 0.5, 0.75):
            t = float(a) + lam * float(b - a)
            assert math.floor(t) == K or t == float(a)
            assert math.floor(10.0 / t) == N or abs(10.0 / t - round(10.0 / t)) < 1e-9


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=2.0, max_value=300.0))
def test_partition_pieces_cover(x):
    part = Partition(x)
    assert float(part.points[0]) == 1.0
    assert abs(float(part.points[-1]) - x) < 1e-9
    diffs = [float(b - a) for a, b in zip(part.points, part.points[1:])]
    assert all(d > 0 for d in diffs)
    assert abs(sum(diffs) - (x - 1.0)) < 1e-9


def test_partition_capacity():
    with pytest.raises(CapacityError):
        Partition(2e7)
    with pytest.raises(DomainError):
        Partition(0.5)


def test_formule_m_values():
    for x in (2.0, 10.0, 97.5):
        N = math.floor(x)
        g = InnerSumFactor([1] * N, FunctionSpec.power(-1.0, 2.0))
        r = integrate_m_kernel(x, g)
        expect = 1 - mpf(1) / mpf(x) ** 2
        assert abs(r.value - expect) <= r.radius


def test_weight_t_reproduces_mcheck():
    x = 100.0
    r = integrate_m_kernel(x, FunctionSpec.power(1.0))
    mc = summatory(x, mode="mp").m_check
    assert abs(r.value - mc.value) <= r.radius + mc.radius


def test_abel_exactness_consistency():
    # weight t^s reproduces (sum mu/n^s - m(x) x^{1-s}) x^{s-1}/(s-1)
    for s, x in ((2.0, 10.0), (0.5 + 3j, 100.0), (2.0, 10_000.0)):
        sm = mpmath.mpc(s) if isinstance(s, complex) else mpmath.mpf(s)
        r = integrate_m_kernel(x, FunctionSpec.power(sm))
        msum = mu_power_sum(x, s)
        snap = summatory(x, mode="mp")
        expect = ((msum.value - snap.m.value * mpmath.power(x, 1 - sm))
                  * mpmath.power(x, sm - 1) / (sm - 1))
        assert abs(r.value - expect) <= r.radius + msum.radius * float(x) + 1e-28, (s, x)


def test_unsupported_kernel_rejected():
    with pytest.raises(UnsupportedKernelError):
        integrate_m_kernel(10.0, lambda t: t)
    with pytest.raises(UnsupportedKernelError):
        FunctionSpec(1.0, 0.0, -1)


def test_radius_scales_with_precision():
    x = 50.0
    r128 = integrate_m_kernel(x, FunctionSpec.power(1.0), 128)
    r192 = integrate_m_kernel(x, FunctionSpec.power(1.0), 192)
    assert r192.radius < r128.radius
    assert abs(r128.value - r192.value) <= r128.radius + r192.radius


def test_function_spec_eval_and_describe():
    fs = FunctionSpec(2.0, -1.0, 1)
    v = fs(mpf(4))
    assert abs(v - 2 * mpmath.log(4) / 4) < 1e-30
    assert "log" in fs.describe()
