"""The comparison kernels built from (s-1) zeta(s) t^s minus truncated power
sums, their closed-form sup bounds, and the fractional-part tail integral
that realizes their Euler-Maclaurin form.

Variants (K = floor(t), P_K = sum_{k<=K} k^(-s)):

    Q_s(t) = (s-1) zeta(s) t^s - (s-1) t^s P_K - t
    q_s(t) = (s-1) Q_s(t)
    R_s(t) = Q_s(t) - (s-1)({t} - 1/2)

kernel_eval computes the definitional formula; kernel_eval_em computes the
equivalent form Q_s(t) = (s-1)({t}-1/2) - t^s (s-1) s J(t) with
J(t) = integral_t^inf ({u}-1/2) u^(-s-1) du evaluated by exact unit pieces
plus the Bernoulli ladder -- no zeta value enters, which is what makes the
cross-check between the two forms meaningful.

Fractional parts use the right-continuous convention {k} = 0 at integers,
matching sums over k <= t that include k = t; left limits are available
explicitly for the continuity/jump checks.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache

import mpmath
from mpmath import mpf, mpc

from .approx import ApproxValue, RIGOROUS, eps_for, radd
from .errors import DomainError, PrecisionError
from .zeta import ComplexParam, bernoulli_ladder_tail, power_prefix_table, zeta_em

_GUARD = 48

Q = "Q"
R = "R"
LITTLE_Q = "q"


@dataclass(frozen=True)
class KernelSpec:
    """A kernel variant together with its complex parameter."""

    variant: str
    s: ComplexParam

    def __post_init__(self):
        if self.variant not in (Q, R, LITTLE_Q):
            raise DomainError(f"unknown kernel variant {self.variant!r}")

    @classmethod
    def make(cls, variant: str, s) -> "KernelSpec":
        return cls(variant, ComplexParam.coerce(s))


def _floor_frac(t: float, left_limit: bool):
    """(K, frac) with K = floor(t) and frac = {t}; at integer t the left limit
    takes K = t - 1 and frac -> 1."""
    K = math.floor(t)
    frac = t - K
    if left_limit and frac == 0.0:
        if K < 2:
            raise DomainError("left limit needs t > 1")
        return K - 1, 1.0
    return K, frac


class FracTailEvaluator:
    """J(t) = integral_t^inf ({u}-1/2) u^(-s-1) du for one s, cached.

    Ladder values at integer anchors and the exact unit-piece cumulative sums
    from small integers up to the base anchor are memoized, so a sweep over
    many t costs one partial piece per evaluation.
    """

    def __init__(self, s: ComplexParam, prec: int):
        s.require_sigma_gt(-1.0, "fractional-part tail integral")
        self.s = s
        self.prec = prec
        self.base_anchor = max(8, math.ceil(2 * s.abs()))
        self._ladders: dict[int, tuple] = {}
        self._cum: dict[int, tuple] = {}  # n -> (integral over [n, base_anchor], abs scale)
        self._lock = threading.Lock()

    # exact integral of ({u}-1/2) u^(-s-1) over [a, b] within one unit cell [n, n+1]
    def _piece(self, n: int, a, b):
        sm = self.s.as_mpc()
        # (u - n - 1/2) u^(-s-1) = u^(-s) - (n + 1/2) u^(-s-1)
        c = n + mpf(1) / 2
        if self.s.sigma == 1.0 and self.s.tau == 0.0:
            fa = mpmath.log(a) + c * mpmath.power(a, -1)
            fb = mpmath.log(b) + c * mpmath.power(b, -1)
        elif self.s.sigma == 0.0 and self.s.tau == 0.0:
            fa = a - c * mpmath.log(a)
            fb = b - c * mpmath.log(b)
        else:
            fa = mpmath.power(a, 1 - sm) / (1 - sm) + c * mpmath.power(a, -sm) / sm
            fb = mpmath.power(b, 1 - sm) / (1 - sm) + c * mpmath.power(b, -sm) / sm
        scale = float(mpmath.fabs(fa)) + float(mpmath.fabs(fb))
        return fb - fa, scale

    def _ladder(self, T: int, target: float):
        key = T
        hit = self._ladders.get(key)
        if hit is not None and hit[1] <= target:
            return hit
        with mpmath.mp.workprec(self.prec + _GUARD):
            J, rem = bernoulli_ladder_tail(self.s, T, target)
        anchor = T
        while rem > target:
            anchor *= 2
            with mpmath.mp.workprec(self.prec + _GUARD):
                segs = mpc(0) if self.s.tau else mpf(0)
                scale = 0.0
                for n in range(T, anchor):
                    v, sc = self._piece(n, mpf(n), mpf(n + 1))
                    segs += v
                    scale += sc
                J2, rem = bernoulli_ladder_tail(self.s, anchor, target)
                J = segs + J2
            if anchor > 1 << 16:
                raise PrecisionError(
                    f"tail integral at s={self.s} cannot reach radius {target}")
        result = (J, rem)
        with self._lock:
            self._ladders[key] = result
        return result

    def _cum_to_anchor(self, n: int, target: float):
        """integral over [n, base_anchor] + ladder(base_anchor), cached per n."""
        with self._lock:
            hit = self._cum.get(n)
        if hit is not None:
            return hit
        with mpmath.mp.workprec(self.prec + _GUARD):
            total = mpc(0) if self.s.tau else mpf(0)
            scale = 0.0
            for k in range(n, self.base_anchor):
                v, sc = self._piece(k, mpf(k), mpf(k + 1))
                total += v
                scale += sc
        result = (total, scale)
        with self._lock:
            self._cum[n] = result
        return result

    def eval(self, t: float, target_radius: float, left_limit: bool = False) -> ApproxValue:
        if t < 1:
            raise DomainError(f"t must be >= 1, got {t}")
        K, frac = _floor_frac(t, left_limit)
        eps = eps_for(self.prec)
        with mpmath.mp.workprec(self.prec + _GUARD):
            tm = mpf(t)
            ceil_t = K if frac == 0.0 else K + 1
            if ceil_t <= self.base_anchor:
                head, scale = ((mpc(0) if self.s.tau else mpf(0)), 0.0)
                if frac != 0.0:
                    head, scale = self._piece(K, tm, mpf(ceil_t))
                cum, sc2 = self._cum_to_anchor(ceil_t, target_radius)
                ladder, rem = self._ladder(self.base_anchor, target_radius)
                J = head + cum + ladder
                scale += sc2
            else:
                head, scale = ((mpc(0) if self.s.tau else mpf(0)), 0.0)
                if frac != 0.0:
                    head, scale = self._piece(K, tm, mpf(ceil_t))
                ladder, rem = self._ladder(ceil_t, target_radius)
                J = head + ladder
            radius = radd(rem, eps * 16 * (scale + float(mpmath.fabs(J))))
            return ApproxValue(+J, radius, RIGOROUS, self.prec)


@lru_cache(maxsize=64)
def frac_tail_evaluator(sigma: float, tau: float, prec: int) -> FracTailEvaluator:
    return FracTailEvaluator(ComplexParam(sigma, tau), prec)


def frac_tail_integral(s, t: float, target_radius: float = 1e-30,
                       precision: int | None = None, left_limit: bool = False) -> ApproxValue:
    sp = ComplexParam.coerce(s)
    prec = precision or mpmath.mp.prec
    return frac_tail_evaluator(sp.sigma, sp.tau, prec).eval(t, target_radius, left_limit)


def kernel_eval(spec: KernelSpec, t: float, target_radius: float = 1e-30,
                precision: int | None = None, left_limit: bool = False) -> ApproxValue:
    """Kernel value by the definitional formula, radius combining the zeta
    radius and summation rounding."""
    s = spec.s
    s.require_not_one("kernels")
    s.require_sigma_gt(-1.0, "kernel_eval")
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    prec = precision or mpmath.mp.prec
    eps = eps_for(prec)
    K, frac = _floor_frac(t, left_limit)
    table = power_prefix_table(s.sigma, s.tau, prec)
    zeta_val, _ = zeta_em(s, target_radius / 4, precision=prec, want_derivative=False)
    with mpmath.mp.workprec(prec + _GUARD):
        sm = s.as_mpc()
        tm = mpf(t)
        ts = mpmath.power(tm, sm)
        PK = table.value(K)
        q_part = (sm - 1) * ts * (zeta_val.value - PK) - tm
        ts_abs = float(mpmath.fabs(ts))
        sm1_abs = abs(complex(sm - 1))
        data_rad = sm1_abs * ts_abs * (zeta_val.radius + table.radius(K))
        round_scale = (sm1_abs * ts_abs * (float(mpmath.fabs(zeta_val.value)) + float(mpmath.fabs(PK)))
                       + t + float(mpmath.fabs(q_part)))
        if spec.variant == Q:
            val = q_part
        elif spec.variant == LITTLE_Q:
            val = (sm - 1) * q_part
            data_rad *= sm1_abs
            round_scale *= sm1_abs
        else:  # R
            val = q_part - (sm - 1) * (mpf(frac) - mpf(1) / 2)
            round_scale += sm1_abs
        radius = radd(data_rad, eps * 16 * round_scale)
        return ApproxValue(+val, radius, RIGOROUS, prec)


def kernel_eval_em(spec: KernelSpec, t: float, target_radius: float = 1e-30,
                   precision: int | None = None, left_limit: bool = False) -> ApproxValue:
    """Kernel value by the Euler-Maclaurin form (fractional-part tail integral);
    zeta never enters."""
    s = spec.s
    s.require_not_one("kernels")
    s.require_sigma_gt(-1.0, "kernel_eval_em")
    prec = precision or mpmath.mp.prec
    eps = eps_for(prec)
    _, frac = _floor_frac(t, left_limit)
    prefactor_abs = s.abs() * abs(complex(s.as_mpc() - 1)) * t ** s.sigma
    J = frac_tail_integral(s, t, target_radius / max(prefactor_abs, 1.0),
                           precision=prec, left_limit=left_limit)
    with mpmath.mp.workprec(prec + _GUARD):
        sm = s.as_mpc()
        tm = mpf(t)
        ts = mpmath.power(tm, sm)
        tail_term = ts * (sm - 1) * sm * J.value
        r_val = -tail_term
        tail_rad = prefactor_abs * J.radius
        if spec.variant == R:
            val = r_val
        elif spec.variant == Q:
            val = (sm - 1) * (mpf(frac) - mpf(1) / 2) + r_val
        else:
            val = (sm - 1) * ((sm - 1) * (mpf(frac) - mpf(1) / 2) + r_val)
            tail_rad *= abs(complex(sm - 1))
        scale = prefactor_abs * float(mpmath.fabs(J.value)) + float(mpmath.fabs(val)) + abs(complex(sm - 1))
        return ApproxValue(+val, radd(tail_rad, eps * 16 * scale), RIGOROUS, prec)


# ---------------------------------------------------------------------------
# Closed-form bounds.  Pure arithmetic, no radius.
# ---------------------------------------------------------------------------

SUP_Q = "sup_Q"
MID_Q = "mid_Q"
IBP_R = "ibp_R"
REAL_R = "real_R"


def kernel_bound(s, form: str, t: float | None = None) -> float:
    """Closed-form bounds: sup_Q >= |Q_s| on [1, inf) (sigma > 0); mid_Q >=
    |R_s| uniformly (sigma > 0); ibp_R >= |R_s(t)| with 1/t decay
    (sigma > -1); real_R the sharper real-s variant (sigma > -1)."""
    sp = ComplexParam.coerce(s)
    sigma = sp.sigma
    s_abs = sp.abs()
    s1_abs = math.hypot(sigma - 1.0, sp.tau)
    if form == SUP_Q:
        sp.require_sigma_gt(0.0, "sup_Q bound")
        return s_abs * s1_abs / abs(sigma)
    if form == MID_Q:
        sp.require_sigma_gt(0.0, "mid_Q bound")
        return 0.5 * s_abs * s1_abs / abs(sigma)
    if t is None or t < 1:
        raise DomainError(f"{form} bound needs t >= 1")
    if form == IBP_R:
        sp.require_sigma_gt(-1.0, "ibp_R bound")
        sp1_abs = math.hypot(sigma + 1.0, sp.tau)
        return (sp1_abs / abs(sigma + 1.0)) * s_abs * s1_abs / 6.0 / t
    if form == REAL_R:
        if not sp.is_real:
            raise DomainError("real_R bound requires real s")
        sp.require_sigma_gt(-1.0, "real_R bound")
        return abs(sigma) * abs(sigma - 1.0) / (8.0 * t)
    raise DomainError(f"unknown bound form {form!r}")


def hel_remainder_bound(s, t: float) -> float:
    """(5/6)/t^sigma bound on |zeta(s) - sum_{n<=t} n^(-s) - t^(1-s)/(s-1)|,
    valid for t >= |Im s|, 0 < Re s <= 1, s != 1."""
    sp = ComplexParam.coerce(s)
    if not (0.0 < sp.sigma <= 1.0):
        raise DomainError("truncation bound requires 0 < Re(s) <= 1")
    sp.require_not_one("truncation bound")
    if t < abs(sp.tau):
        raise DomainError(f"truncation bound requires t >= |Im s| = {abs(sp.tau)}")
    return (5.0 / 6.0) / t ** sp.sigma


def hel_sup_abs_Q(s) -> float:
    """(5/6)|s-1|, a sup bound for |Q_s(t)| on [max(1,|Im s|), inf) derived
    from the truncation bound: Q = (s-1) t^s (zeta - P - t^(1-s)/(s-1))."""
    sp = ComplexParam.coerce(s)
    if not (0.0 < sp.sigma <= 1.0):
        raise DomainError("truncation-derived sup requires 0 < Re(s) <= 1")
    sp.require_not_one("truncation-derived sup")
    return (5.0 / 6.0) * math.hypot(sp.sigma - 1.0, sp.tau)
