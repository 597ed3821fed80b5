import mpmath
import pytest

from moebius.errors import DomainError
from moebius.mellin import (TruncatedTransform, default_T, derivK1_residual,
                            derivK2_residual, derivK3_residual, ent_residual,
                            har_residual, mtronq_residual, mtronqch_residual,
                            mtronqchch_residual, power_log_tail)


def _agree(lhs, rhs):
    return float(mpmath.fabs(lhs.value - rhs.value)) <= lhs.radius + rhs.radius


TRANSFORMS = [mtronq_residual, mtronqch_residual, mtronqchch_residual,
              derivK1_residual, derivK2_residual, derivK3_residual]


@pytest.mark.parametrize("fn", TRANSFORMS)
@pytest.mark.parametrize("sigma", [1.04, 2.0])
def test_transform_identities(fn, sigma):
    lhs, rhs = fn(sigma, 1000.0, T=100_000)
    assert _agree(lhs, rhs), (fn.__name__, sigma)


def test_transform_rejects_wrong_halfplane():
    with pytest.raises(DomainError):
        mtronq_residual(0.9, 1000.0)


def test_default_T_policy():
    assert default_T(10.0) == 10**6
    assert default_T(1e4) == 10**7
    assert default_T(1e6) == 10**7  # capped


def test_power_log_tail_closed_form():
    # against direct quadrature on a finite horizon proxy
    sigma, T = 2.5, 50.0
    val = power_log_tail(sigma, T, 1)
    ref = mpmath.quad(lambda t: t**-sigma * mpmath.log(t / T), [T, 200, 1e4, mpmath.inf])
    assert abs(val - float(ref)) < 1e-10


def test_basis_integral_against_quad():
    # int_x^T (mcheck(t)-1) t^-s dt against mpmath piecewise quadrature
    tt = TruncatedTransform(2.0, 10.0, 40.0, "mcheck1", 0)
    from moebius.summatory import prefix_sweep
    sw = prefix_sweep(64)
    def integrand(t):
        n = int(mpmath.floor(t))
        mcheck = sw.m[n - 1] * mpmath.log(t) - sw.Smlog[n - 1]
        return (mcheck - 1) * t**-2.0
    ref = mpmath.quad(integrand, list(range(10, 41)))
    assert abs(complex(tt.basis[0].value).real - float(ref)) <= tt.basis[0].radius + 1e-10


def test_mdnorm_tail_coefficients_positive():
    tt = TruncatedTransform(2.0, 1000.0, 200_000.0, "mdnorm", 0)
    D, E = tt.mdnorm_tail_coeffs()
    assert 0 < D < 5 and 0 < E < 0.1


def test_har_and_ent():
    assert _agree(*har_residual(2.0, 50.0, T=200_000))
    assert _agree(*har_residual(0.5 + 3j, 20.5, T=200_000))
    assert _agree(*ent_residual(2.0, 7.0))
    assert _agree(*ent_residual(0.5 + 10j, 33.3))


def test_transform_bad_range():
    with pytest.raises(DomainError):
        TruncatedTransform(2.0, 100.0, 50.0, "m", 0)
