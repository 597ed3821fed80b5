import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from moebius.errors import DomainError
from moebius.kernels import (IBP_R, KernelSpec, MID_Q, REAL_R, SUP_Q,
                             frac_tail_integral, hel_remainder_bound,
                             hel_sup_abs_Q, kernel_bound, kernel_eval,
                             kernel_eval_em)


def test_Q_at_s2_t1():
    q = kernel_eval(KernelSpec.make("Q", 2), 1.0, 1e-30)
    expect = mpmath.zeta(2) - 2  # (s-1)zeta - (s-1) - 1 at s = 2
    assert abs(q.value - expect) <= q.radius + 1e-30
    assert abs(float(q.value) + 0.3550660) < 1e-6


def test_em_cross_check_spot():
    for s in (2.0, 0.5 + 5j, -0.5 + 14.13j, 3.0):
        for t in (1.0, 2.5, 41.77, 99.5):
            d = kernel_eval(KernelSpec.make("Q", s), t, 1e-28)
            e = kernel_eval_em(KernelSpec.make("Q", s), t, 1e-28)
            assert abs(d.value - e.value) <= d.radius + e.radius, (s, t)


def test_R_continuity_and_Q_jump():
    s = 0.5 + 3j
    sm = mpmath.mpc(0.5, 3)
    for k in (2, 5, 17):
        rl = kernel_eval(KernelSpec.make("R", s), float(k), 1e-28, left_limit=True)
        rr = kernel_eval(KernelSpec.make("R", s), float(k), 1e-28)
        assert abs(rl.value - rr.value) <= rl.radius + rr.radius
        ql = kernel_eval(KernelSpec.make("Q", s), float(k), 1e-28, left_limit=True)
        qr = kernel_eval(KernelSpec.make("Q", s), float(k), 1e-28)
        assert abs((qr.value - ql.value) + (sm - 1)) <= ql.radius + qr.radius + 1e-25


def test_q_variant_is_sminus1_times_Q():
    s = 1.5 + 5j
    sm = mpmath.mpc(1.5, 5)
    for t in (1.0, 7.3, 20.0):
        q = kernel_eval(KernelSpec.make("Q", s), t, 1e-28)
        lq = kernel_eval(KernelSpec.make("q", s), t, 1e-28)
        assert abs(lq.value - (sm - 1) * q.value) <= lq.radius + 20 * q.radius


def test_R_equals_Q_minus_fracterm():
    s = 0.5 + 5j
    sm = mpmath.mpc(0.5, 5)
    for t in (1.5, 7.3):
        q = kernel_eval(KernelSpec.make("Q", s), t, 1e-28)
        r = kernel_eval(KernelSpec.make("R", s), t, 1e-28)
        frac = t - math.floor(t)
        assert abs(r.value - (q.value - (sm - 1) * (mpmath.mpf(frac) - 0.5))) \
            <= q.radius + r.radius + 1e-25


def test_kernel_bounds_examples():
    assert abs(kernel_bound(2, SUP_Q) - 1.0) < 1e-15          # (2/2)*1
    assert abs(kernel_bound(2, MID_Q) - 0.5) < 1e-15
    assert abs(kernel_bound(2, IBP_R, 10.0) - 1.0 / 30) < 1e-15
    b = kernel_bound(0.5 + 14.13j, SUP_Q)
    assert abs(b - 399.8138) < 1e-3  # |s||s-1|/sigma; the quoted round-up is 399.9
    assert kernel_bound(2, REAL_R, 10.0) == pytest.approx(2.0 / 80)


def test_kernel_bound_halfplane_guards():
    with pytest.raises(DomainError):
        kernel_bound(-0.5, SUP_Q)
    with pytest.raises(DomainError):
        kernel_bound(-1.5, IBP_R, 5.0)
    with pytest.raises(DomainError):
        kernel_bound(2 + 1j, REAL_R, 5.0)
    with pytest.raises(DomainError):
        kernel_bound(2, IBP_R)  # t required


def test_bounds_dominate_values():
    for s in (0.5 + 5j, 2.0, 1.5 + 14.13j):
        bQ = kernel_bound(s, SUP_Q)
        bR = kernel_bound(s, MID_Q)
        for t in (1.0, 3.3, 12.0, 50.0):
            q = kernel_eval(KernelSpec.make("Q", s), t, 1e-25)
            r = kernel_eval(KernelSpec.make("R", s), t, 1e-25)
            assert abs(q.value) <= bQ + q.radius
            assert abs(r.value) <= bR + r.radius
            assert abs(r.value) <= kernel_bound(s, IBP_R, t) + r.radius


def test_hel_machinery():
    s = 0.5 + 14.13j
    assert hel_remainder_bound(s, 20.0) == pytest.approx((5 / 6) / 20**0.5)
    assert hel_sup_abs_Q(s) == pytest.approx((5 / 6) * abs(s - 1))
    with pytest.raises(DomainError):
        hel_remainder_bound(s, 10.0)  # below |Im s|
    with pytest.raises(DomainError):
        hel_remainder_bound(1.5 + 3j, 20.0)  # sigma > 1
    # the sup bound really dominates beyond |Im s|
    sup = hel_sup_abs_Q(s)
    for t in (14.2, 20.0, 100.0, 1000.0):
        q = kernel_eval(KernelSpec.make("Q", s), t, 1e-20)
        assert abs(q.value) <= sup + q.radius


def test_frac_tail_against_closed_form():
    # J(t) for non-integer t against the zeta closed form
    for s in (0.5 + 3j, 2.0):
        sm = mpmath.mpc(s) if isinstance(s, complex) else mpmath.mpf(s)
        for t in (1.0, 7.3, 33.5):
            J = frac_tail_integral(s, t, 1e-30)
            K = math.floor(t)
            psum = sum(mpmath.power(n, -sm) for n in range(1, K + 1))
            frac = t - K
            # from the floor-gap transform: J(t) = -(zeta - psum - t^{1-s}/(s-1)
            #   + (1/2 - frac) t^{-s}) / s
            tm = mpmath.mpf(t)
            ref = -(mpmath.zeta(sm) - psum - mpmath.power(tm, 1 - sm) / (sm - 1)
                    + (mpmath.mpf(1) / 2 - frac) * mpmath.power(tm, -sm)) / sm
            assert abs(J.value - ref) <= J.radius + 1e-25, (s, t)


def test_domain_guards():
    with pytest.raises(DomainError):
        kernel_eval(KernelSpec.make("Q", 1.0), 2.0)
    with pytest.raises(DomainError):
        kernel_eval(KernelSpec.make("Q", 2.0), 0.5)
    with pytest.raises(DomainError):
        KernelSpec.make("X", 2.0)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=1.0, max_value=100.0, allow_nan=False))
def test_fractional_part_integral_identity(X):
    # int_1^X ({u}-1/2) du = ({X}^2 - {X})/2, in [-1/8, 0]
    K = math.floor(X)
    total = 0.0
    for n in range(1, K):
        total += 0.0  # full unit cells integrate to zero
    frac = X - K
    total += (frac * frac - frac) / 2
    closed = ((X - K) ** 2 - (X - K)) / 2
    assert total == pytest.approx(closed, abs=1e-12)
    assert -0.125 - 1e-12 <= closed <= 0.0
