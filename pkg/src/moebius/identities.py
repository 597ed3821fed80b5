"""Exact finite identities linking the summatory functions to the kernels.

Each *_sides function evaluates the two sides of one identity with
independent machinery (direct summation + snapshot values on one side, exact
piecewise integration on the other) and returns them as ApproxValues; a zero
residual within combined radii is the correctness statement.
"""

from __future__ import annotations

import math

import mpmath
from mpmath import mpf

from .approx import ApproxValue, RIGOROUS, eps_for, radd
from .constants import gamma_const
from .piecewise import (FunctionSpec, HalfMinusFracFactor,
                        HarmonicWeightFactor, InnerSumFactor, LogMinusHFactor,
                        PowLogSum, PowSumFactor, QKernelFactor, RKernelFactor,
                        integrate_partition, integrate_m_kernel,
                        m_weight_factor, mcheck_minus_one_factor,
                        mdcheck_normalized_factor, mu_over_n_values)
from .sieve import sieve_range
from .summatory import summatory
from .zeta import ComplexParam, zeta_em

_GUARD = 96


class StepPolyFactor:
    """Piecewise log-polynomial in t with coefficients indexed by K = floor(t):
    poly(K) = t^power * sum_j coeffs[j][K] log^j t."""

    uses = "K"

    def __init__(self, coeff_columns, power=0):
        self.cols = coeff_columns  # list over j of lists indexed by K
        self.power = power

    def poly(self, K: int) -> PowLogSum:
        out = PowLogSum()
        for j, col in enumerate(self.cols):
            c = col[min(K, len(col) - 1)]
            if c != 0:
                out.add_monomial(c, mpmath.mpmathify(self.power), j)
        return out

    def zeta_sensitivity(self, idx):
        return None


def _mp_prefixes(x: float, prec: int):
    """(m_K, Smlog_K) prefix columns for K = 0..floor(x) at prec+guard."""
    N = math.floor(x)
    vals = mu_over_n_values(N, prec)
    with mpmath.mp.workprec(prec + _GUARD):
        m_col = [mpf(0)]
        sl_col = [mpf(0)]
        for n in range(1, N + 1):
            v = vals[n - 1]
            if v == 0:
                m_col.append(m_col[-1])
                sl_col.append(sl_col[-1])
            else:
                m_col.append(m_col[-1] + v)
                sl_col.append(sl_col[-1] + v * mpmath.log(n))
    return m_col, sl_col


def mu_power_sum(x: float, s, precision: int | None = None) -> ApproxValue:
    """sum_{n<=x} mu(n) n^(-s), compensated at mp precision."""
    sp = ComplexParam.coerce(s)
    prec = precision or mpmath.mp.prec
    N = math.floor(x)
    table = sieve_range(1, max(N, 1))
    eps = eps_for(prec)
    with mpmath.mp.workprec(prec + _GUARD):
        sm = sp.as_mpc()
        total = mpf(0) if sp.is_real else mpmath.mpc(0)
        abs_sum = 0.0
        for n in range(1, N + 1):
            mu = table.mu(n)
            if mu:
                term = mu * mpmath.power(n, -sm)
                total += term
                abs_sum += float(mpmath.fabs(term))
        return ApproxValue(+total, radd(eps * 8 * abs_sum), RIGOROUS, prec)


def mu_log_power_sum(x: float, s, precision: int | None = None) -> ApproxValue:
    """sum_{n<=x} mu(n) n^(-s) log(x/n)."""
    sp = ComplexParam.coerce(s)
    prec = precision or mpmath.mp.prec
    N = math.floor(x)
    table = sieve_range(1, max(N, 1))
    eps = eps_for(prec)
    with mpmath.mp.workprec(prec + _GUARD):
        sm = sp.as_mpc()
        xm = mpf(x)
        total = mpf(0) if sp.is_real else mpmath.mpc(0)
        abs_sum = 0.0
        for n in range(1, N + 1):
            mu = table.mu(n)
            if mu:
                term = mu * mpmath.power(n, -sm) * mpmath.log(xm / n)
                total += term
                abs_sum += float(mpmath.fabs(term))
        return ApproxValue(+total, radd(eps * 8 * abs_sum), RIGOROUS, prec)


def _x_pows(s: ComplexParam, x: float):
    sm = s.as_mpc()
    xm = mpf(x)
    return mpmath.power(xm, 1 - sm), mpmath.power(xm, sm - 1)  # x^{1-s}, x^{s-1}


def mieux1_sides(s, x: float, precision: int = 128):
    """zeta(s)(sum mu/n^s - m(x)/x^{s-1}) - 1  vs
    (m-check(x)-1)/x^{s-1} + x^{1-s} * integral m(x/t) Q_s(t) dt/t^2."""
    sp = ComplexParam.coerce(s)
    sp.require_not_one("first kernel identity")
    with mpmath.mp.workprec(precision + _GUARD):
        z, _ = zeta_em(sp, 1e-36, precision=precision, want_derivative=False)
        snap = summatory(x, mode="mp", precision=precision)
        msum = mu_power_sum(x, sp, precision)
        x1s, xs1 = _x_pows(sp, x)
        lhs = z * (msum - snap.m * ApproxValue.exact(x1s, precision)) - 1
        Qf = QKernelFactor(sp, precision)
        integ = integrate_partition(x, [m_weight_factor(x, precision), Qf],
                                    PowLogSum.monomial(mpf(1), mpf(-2), 0),
                                    precision=precision)
        rhs = (snap.m_check - 1) * ApproxValue.exact(x1s, precision) \
            + ApproxValue.exact(x1s, precision) * integ
    return lhs, rhs


def poids_sides(s, x: float, precision: int = 128):
    """Same left side as mieux1 vs the fractional-part-corrected expansion
    with the R kernel (valid for Re s > -1)."""
    sp = ComplexParam.coerce(s)
    sp.require_not_one("weighted kernel identity")
    sp.require_sigma_gt(-1.0, "weighted kernel identity")
    with mpmath.mp.workprec(precision + _GUARD):
        sm = sp.as_mpc()
        z, _ = zeta_em(sp, 1e-36, precision=precision, want_derivative=False)
        snap = summatory(x, mode="mp", precision=precision)
        msum = mu_power_sum(x, sp, precision)
        x1s, _ = _x_pows(sp, x)
        xms = mpmath.power(mpf(x), -sm)
        lhs = z * (msum - snap.m * ApproxValue.exact(x1s, precision)) - 1
        Rf = RKernelFactor(sp, precision)
        integ = integrate_partition(x, [m_weight_factor(x, precision), Rf],
                                    PowLogSum.monomial(mpf(1), mpf(-2), 0),
                                    precision=precision)
        x1s_a = ApproxValue.exact(x1s, precision)
        rhs = (ApproxValue.exact(sm) * (snap.m_check - 1) * x1s_a
               - ApproxValue.exact((sm - 1) / 2) * snap.m1 * x1s_a
               + ApproxValue.exact((sm - 1) * xms)
               + x1s_a * integ)
    return lhs, rhs


def k1_sides(s, x: float, precision: int = 128):
    """x^{1-s} integral [m-check(x/t)-1] sum_j (t/j)^s dt/t^2  vs
    integral [log t - H(t)] t^{-s} dt, both over [1, x]."""
    sp = ComplexParam.coerce(s)
    with mpmath.mp.workprec(precision + _GUARD):
        x1s, _ = _x_pows(sp, x)
        lhs_int = integrate_partition(
            x, [mcheck_minus_one_factor(x, precision), PowSumFactor(sp, precision)],
            PowLogSum.monomial(mpf(1), mpf(-2), 0), precision=precision)
        lhs = ApproxValue.exact(x1s, precision) * lhs_int
        rhs = integrate_partition(
            x, [LogMinusHFactor(math.floor(x), precision)],
            PowLogSum.monomial(mpf(1), -sp.as_mpc(), 0), precision=precision)
    return lhs, rhs


def kgen2_sides(s, x: float, precision: int = 128):
    """The k = 2 instance with surrogate polynomial 2X - 2 gamma:
    x^{1-s} integral [mdd(x/t) - 2log(x/t) + 2gamma] sum_j (t/j)^s dt/t^2  vs
    integral [log^2 t - sum_{j<=t} (2 log(t/j) - 2 gamma)/j] t^{-s} dt."""
    sp = ComplexParam.coerce(s)
    N = math.floor(x)
    with mpmath.mp.workprec(precision + _GUARD):
        g = gamma_const(precision + _GUARD)
        x1s, _ = _x_pows(sp, x)
        lhs_int = integrate_partition(
            x, [mdcheck_normalized_factor(x, precision), PowSumFactor(sp, precision)],
            PowLogSum.monomial(mpf(1), mpf(-2), 0), precision=precision)
        lhs = ApproxValue.exact(x1s, precision) * lhs_int
        # right integrand: log^2 t - 2 H_K log t + 2 SHlog_K + 2 gamma H_K
        H = [mpf(0)]
        SHl = [mpf(0)]
        for k in range(1, N + 2):
            H.append(H[-1] + mpf(1) / k)
            SHl.append(SHl[-1] + mpmath.log(k) / k)
        w0 = [2 * SHl[k] + 2 * g * H[k] for k in range(len(H))]
        w1 = [-2 * H[k] for k in range(len(H))]
        w2 = [mpf(1)] * len(H)
        rhs = integrate_partition(
            x, [StepPolyFactor([w0, w1, w2])],
            PowLogSum.monomial(mpf(1), -sp.as_mpc(), 0), precision=precision)
    return lhs, rhs


def double_check_borne_sides(x: float, precision: int = 128):
    """integral m(x/t) t (H(t) - log t - gamma) dt/t^2  vs
    -(mdd(x) - 2log x + 2gamma)/2 - gamma (m-check(x) - 1)."""
    with mpmath.mp.workprec(precision + _GUARD):
        g = gamma_const(precision + _GUARD)
        lhs = integrate_partition(
            x, [m_weight_factor(x, precision), HarmonicWeightFactor(math.floor(x), precision)],
            PowLogSum.monomial(mpf(1), mpf(-2), 0), precision=precision)
        snap = summatory(x, mode="mp", precision=precision)
        logx = mpmath.log(mpf(x))
        norm = snap.m_dcheck - ApproxValue.exact(2 * logx - 2 * g, precision)
        rhs = ApproxValue.exact(mpf(-1) / 2) * norm \
            - ApproxValue.exact(g) * (snap.m_check - 1)
    return lhs, rhs


def halfstep_candidates(s, x: float, precision: int = 128):
    """The fractional-part cross term integral m(x/t)(s-1)(1/2-{t}) dt/t^2,
    with the candidate closed forms its source display could have meant.

    Returns (value, {name: candidate ApproxValue}); the sign-corrected
    bracketing -(s-1)((mcheck-1) - m1/2 + 1/x) is the exact one.
    """
    sp = ComplexParam.coerce(s)
    with mpmath.mp.workprec(precision + _GUARD):
        sm = sp.as_mpc()
        integ = integrate_partition(
            x, [m_weight_factor(x, precision), HalfMinusFracFactor()],
            PowLogSum.monomial(mpf(1), mpf(-2), 0), precision=precision)
        value = ApproxValue.exact(sm - 1) * integ
        snap = summatory(x, mode="mp", precision=precision)
        inv_x = ApproxValue.exact(mpf(1) / mpf(x))
        mc1 = snap.m_check - 1
        bracket = mc1 - snap.m1 * ApproxValue.exact(mpf(1) / 2) + inv_x
        candidates = {
            "as-printed": ApproxValue.exact(sm - 1) * bracket,
            "outer-first-term-only": ApproxValue.exact(sm - 1) * mc1
                                     - snap.m1 * ApproxValue.exact(mpf(1) / 2) + inv_x,
            "sign-corrected": ApproxValue.exact(-(sm - 1)) * bracket,
        }
    return value, candidates


def formule_m_value(x: float, precision: int = 128):
    """integral m(x/t) [sum_{k<=t} 2k/t] dt/t^2, which equals 1 - 1/x^2."""
    N = math.floor(x)
    with mpmath.mp.workprec(precision + _GUARD):
        g = InnerSumFactor([1] * N, FunctionSpec.power(-1.0, 2.0))
        value = integrate_m_kernel(x, g, precision)
        expect = 1 - mpf(1) / mpf(x) ** 2
    return value, expect


def abel_s_sides(s, x: float, precision: int = 128):
    """(s-1) integral_1^x m(t) t^{-s} dt  vs  sum mu/n^s - m(x)/x^{s-1}."""
    sp = ComplexParam.coerce(s)
    m_col, _ = _mp_prefixes(x, precision)
    with mpmath.mp.workprec(precision + _GUARD):
        sm = sp.as_mpc()
        integ = integrate_partition(
            x, [StepPolyFactor([m_col])],
            PowLogSum.monomial(mpf(1), -sm, 0), precision=precision)
        lhs = ApproxValue.exact(sm - 1) * integ
        x1s, _ = _x_pows(sp, x)
        snap = summatory(x, mode="mp", precision=precision)
        rhs = mu_power_sum(x, sp, precision) - snap.m * ApproxValue.exact(x1s)
    return lhs, rhs


def int_check_sides(s, x: float, precision: int = 128):
    """(s-1) integral m-check(t) t^{-s} dt  vs
    integral m(t) t^{-s} dt - x^{1-s} m-check(x)  (f = m instance)."""
    sp = ComplexParam.coerce(s)
    m_col, sl_col = _mp_prefixes(x, precision)
    with mpmath.mp.workprec(precision + _GUARD):
        sm = sp.as_mpc()
        extra = PowLogSum.monomial(mpf(1), -sm, 0)
        mcheck_factor = StepPolyFactor([[-v for v in sl_col], m_col])
        lhs = ApproxValue.exact(sm - 1) * integrate_partition(
            x, [mcheck_factor], extra, precision=precision)
        int_m = integrate_partition(x, [StepPolyFactor([m_col])], extra,
                                    precision=precision)
        snap = summatory(x, mode="mp", precision=precision)
        x1s, _ = _x_pows(sp, x)
        rhs = int_m - ApproxValue.exact(x1s) * snap.m_check
    return lhs, rhs
