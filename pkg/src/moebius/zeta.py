"""Euler-Maclaurin evaluation of zeta(s), zeta'(s) and truncated power sums,
valid for Re(s) > -1, with rigorous remainder radii.

Everything rests on one Bernoulli ladder: repeated integration by parts of

    J(T) = integral_T^infinity ({u} - 1/2) u^(-s-1) du      (T integer)

through the periodic Bernoulli antiderivatives A_j = B~_j({u})/j!, whose
values at integers are B_j/j! and whose sup is bounded by 2 zeta(j)/(2pi)^j.
The remainder after K levels is bounded explicitly, so the radius is a
computed quantity, not an estimate.  zeta(s) is then

    sum_{n<=N} n^(-s) + N^(1-s)/(s-1) - N^(-s)/2 - s J(N)

and zeta'(s) is the termwise s-derivative of the same expansion, with its own
remainder bound (the ladder also returns dJ/ds).
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

_GUARD = 48


@dataclass(frozen=True)
class ComplexParam:
    """s = sigma + i tau together with the half-plane guards operations need."""

    sigma: float
    tau: float = 0.0

    @classmethod
    def coerce(cls, s) -> "ComplexParam":
        if isinstance(s, ComplexParam):
            return s
        if isinstance(s, (int, float, mpf)):
            return cls(float(s), 0.0)
        if isinstance(s, (complex, mpc)):
            return cls(float(s.real), float(s.imag))
        raise TypeError(f"cannot interpret {s!r} as a complex parameter")

    def as_mpc(self):
        if self.tau == 0.0:
            return mpf(self.sigma)
        return mpc(self.sigma, self.tau)

    @property
    def is_real(self) -> bool:
        return self.tau == 0.0

    def require_sigma_gt(self, bound: float, what: str) -> None:
        if not self.sigma > bound:
            raise DomainError(f"{what} requires Re(s) > {bound}, got {self.sigma}")

    def require_not_one(self, what: str) -> None:
        if self.is_real and self.sigma == 1.0:
            raise DomainError(f"{what} is undefined at s = 1")

    def abs(self) -> float:
        return math.hypot(self.sigma, self.tau)

    def __str__(self):
        return f"{self.sigma}{self.tau:+}i" if self.tau else f"{self.sigma}"


def _max_periodic_bernoulli(k: int) -> float:
    # sup |B~_k({u})| / k!  <=  2 zeta(k) / (2 pi)^k  (k >= 2); zeta(k) <= 1.645
    return 2.0 * 1.645 / (2.0 * math.pi) ** k


def bernoulli_ladder_tail(s: ComplexParam, T: int, target: float,
                          max_levels: int = 64, want_derivative: bool = False):
    """J(T) = integral_T^inf ({u}-1/2) u^(-s-1) du at integer T >= 1.

    Returns (J, J_radius) or (J, J_radius, dJ/ds, dJds_radius).
    Radii include the truncation remainder; rounding at the working precision
    is folded in by the caller's accounting (values returned at workprec).
    """
    sm = s.as_mpc()
    sigma = s.sigma
    logT = mpmath.log(T)
    Tms = mpmath.power(T, -sm)  # T^{-s}
    J = mpmath.mpf(0) if s.is_real else mpc(0)
    Jp = J
    prod = mpmath.mpf(1) if s.is_real else mpc(1)   # prod_{i=1}^{j-1} (s+i)
    prod_dsum = mpmath.mpf(0) if s.is_real else mpc(0)  # sum 1/(s+i), for d/ds
    dsum_abs = 0.0                                   # sum 1/|s+i|
    Tpow = Tms / T                                   # T^{-s-j} at j = 1
    rem = None
    rem_p = None
    levels = 0

    def _bounds(K: int, ap: float):
        scale = _max_periodic_bernoulli(K) * float(T) ** (-(sigma + K - 1)) / (sigma + K - 1)
        r = ap * scale
        rp = ap * scale * (dsum_abs + float(logT) + 1.0 / (sigma + K - 1))
        return r, rp

    for j in range(1, max_levels + 1):
        # remainder if we stopped before consuming level j (K = j):
        if j >= 3:
            rem, rem_p = _bounds(j, float(mpmath.fabs(prod)))
            if rem <= target and levels >= 2:
                break
        b = mpmath.bernoulli(j + 1)
        if b != 0:
            coeff = -(b / mpmath.factorial(j + 1)) * prod
            J += coeff * Tpow
            if want_derivative:
                Jp += coeff * Tpow * (prod_dsum - logT)
            levels += 1
        prod *= sm + j
        prod_dsum += 1 / (sm + j)
        dsum_abs += 1.0 / abs(complex(sm + j))
        Tpow /= T
    else:
        rem, rem_p = _bounds(max_levels + 1, float(mpmath.fabs(prod)))
    if want_derivative:
        return J, rem, Jp, rem_p
    return J, rem


_zeta_cache: dict = {}
_zeta_lock = threading.Lock()


def zeta_em(s, target_radius: float = 1e-30, precision: int | None = None,
            want_derivative: bool = True):
    """(zeta(s), zeta'(s)) as ApproxValues with rigorous radii <= target_radius.

    Valid for Re(s) > -1, s != 1.  The cutoff N and the Bernoulli order are
    chosen adaptively; a PrecisionError is raised if the target cannot be met
    at the configured precision.
    """
    sp = ComplexParam.coerce(s)
    sp.require_sigma_gt(-1.0, "zeta_em")
    sp.require_not_one("zeta_em (pole)")
    if target_radius <= 0:
        raise DomainError("target_radius must be positive")
    prec = precision or mpmath.mp.prec
    key = (sp.sigma, sp.tau, target_radius, prec, want_derivative)
    with _zeta_lock:
        hit = _zeta_cache.get(key)
    if hit is not None:
        return hit
    N = max(10, int(2 * abs(sp.tau)) + 1, int(abs(sp.sigma)) + 2)
    workprec = prec + _GUARD
    max_workprec = prec + _GUARD + 768
    while True:
        with mpmath.mp.workprec(workprec):
            sm = sp.as_mpc()
            J, Jrem, Jp, Jprem = bernoulli_ladder_tail(sp, N, target_radius / (16 * sp.abs() + 16),
                                                       want_derivative=True)
            zrem = sp.abs() * Jrem
            zprem = Jrem + sp.abs() * Jprem
            if zrem > target_radius / 2 or (want_derivative and zprem > target_radius / 2):
                if N > 4_000_000:
                    raise PrecisionError(
                        f"zeta_em cannot reach radius {target_radius} at s={sp} (N={N})")
                N *= 2
                continue
            psum = mpc(0) if sp.tau else mpf(0)
            psum_log = psum
            abs_sum = 0.0
            abs_sum_log = 0.0
            for n in range(1, N + 1):
                term = mpmath.power(n, -sm)
                psum += term
                a = float(mpmath.fabs(term))
                abs_sum += a
                if want_derivative:
                    lg = mpmath.log(n)
                    psum_log += term * lg
                    abs_sum_log += a * float(lg)
            logN = mpmath.log(N)
            Npow1 = mpmath.power(N, 1 - sm)   # N^{1-s}
            NpowS = mpmath.power(N, -sm)      # N^{-s}
            z = psum + Npow1 / (sm - 1) - NpowS / 2 - sm * J
            scale = (abs_sum + float(mpmath.fabs(Npow1 / (sm - 1))) + float(mpmath.fabs(NpowS))
                     + sp.abs() * float(mpmath.fabs(J)) + float(mpmath.fabs(z)))
            # the rounding claim uses 40 fewer bits than were actually carried,
            # an ample cover for the O(N) operations at work precision
            eps_claim = eps_for(workprec - 40)
            z_rad = radd(zrem, eps_claim * 16 * scale)
            if want_derivative:
                zp = (-psum_log
                      - Npow1 * logN / (sm - 1) - Npow1 / (sm - 1) ** 2
                      + logN / 2 * NpowS
                      - J - sm * Jp)
                scale_p = (abs_sum_log + float(mpmath.fabs(Npow1 * logN / (sm - 1)))
                           + float(mpmath.fabs(Npow1 / (sm - 1) ** 2))
                           + float(mpmath.fabs(logN * NpowS))
                           + float(mpmath.fabs(J)) + sp.abs() * float(mpmath.fabs(Jp))
                           + float(mpmath.fabs(zp)))
                zp_rad = radd(zprem, eps_claim * 16 * scale_p)
            else:
                zp, zp_rad, scale_p = None, 0.0, 0.0
            if z_rad > target_radius or (want_derivative and zp_rad > target_radius):
                # rounding-dominated: raise the working precision
                need = max(scale, scale_p, 1.0)
                bits = math.ceil(math.log2(need * 32 / target_radius)) + 48
                workprec = max(workprec + 64, bits)
                if workprec > max_workprec:
                    raise PrecisionError(
                        f"target radius {target_radius} at s={sp} needs more than "
                        f"{max_workprec} working bits")
                continue
            zeta_val = ApproxValue(+z, z_rad, RIGOROUS, prec)
            zeta_prime = (ApproxValue(+zp, zp_rad, RIGOROUS, prec)
                          if want_derivative else None)
            break
    result = (zeta_val, zeta_prime)
    with _zeta_lock:
        if len(_zeta_cache) > 4096:
            _zeta_cache.clear()
        _zeta_cache[key] = result
    return result


def clear_zeta_cache() -> None:
    with _zeta_lock:
        _zeta_cache.clear()


def partial_power_sum(s, t: float, precision: int | None = None) -> ApproxValue:
    """sum_{k <= t} k^(-s), compensated, with a rounding radius."""
    sp = ComplexParam.coerce(s)
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    prec = precision or mpmath.mp.prec
    K = math.floor(t)
    eps = eps_for(prec)
    with mpmath.mp.workprec(prec + _GUARD):
        sm = sp.as_mpc()
        total = mpc(0) if sp.tau else mpf(0)
        abs_sum = 0.0
        for k in range(1, K + 1):
            term = mpmath.power(k, -sm)
            total += term
            abs_sum += float(mpmath.fabs(term))
        return ApproxValue(+total, radd(eps * 8 * abs_sum), RIGOROUS, prec)


class PowerPrefixTable:
    """Prefix sums P_K = sum_{k<=K} k^(-s), grown on demand and cached per s.

    Shared read-only by the kernel and piecewise evaluators; extension is
    guarded by a lock.
    """

    def __init__(self, s: ComplexParam, prec: int):
        self.s = s
        self.prec = prec
        self._lock = threading.Lock()
        with mpmath.mp.workprec(prec + _GUARD):
            zero = mpf(0) if s.is_real else mpc(0)
        self._prefix = [zero]  # P_0 = 0
        self._abs = [0.0]

    def extend(self, K: int) -> None:
        with self._lock:
            if K < len(self._prefix):
                return
            with mpmath.mp.workprec(self.prec + _GUARD):
                sm = self.s.as_mpc()
                for k in range(len(self._prefix), K + 1):
                    term = mpmath.power(k, -sm)
                    self._prefix.append(self._prefix[-1] + term)
                    self._abs.append(self._abs[-1] + float(mpmath.fabs(term)))

    def value(self, K: int):
        if K >= len(self._prefix):
            self.extend(max(K, 2 * len(self._prefix)))
        return self._prefix[K]

    def radius(self, K: int) -> float:
        return eps_for(self.prec) * 8 * self._abs[min(K, len(self._abs) - 1)]


@lru_cache(maxsize=64)
def power_prefix_table(sigma: float, tau: float, prec: int) -> PowerPrefixTable:
    return PowerPrefixTable(ComplexParam(sigma, tau), prec)
