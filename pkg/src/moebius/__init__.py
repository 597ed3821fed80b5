"""Verified numerics for Moebius summatory functions.

Summatory functions of mu(n) (M, m and the log-smoothed m-check, m-double-check),
Euler-Maclaurin zeta evaluation with rigorous remainders, the comparison kernels
built from (s-1)zeta(s)t^s minus truncated power sums, exact piecewise
integration of the 4-parameter integral convolution identity, and a registry of
identity/inequality checks with explicit error radii.
"""

from .approx import ApproxValue, RIGOROUS, HEURISTIC
from .sieve import MobiusTable, sieve_range, iter_segments
from .summatory import SummatorySnapshot, summatory, abs_m_integrals
from .zeta import ComplexParam, zeta_em, partial_power_sum
from .kernels import KernelSpec, kernel_eval, kernel_eval_em, kernel_bound
from .quadrature import integrate_abs_kernel, sup_abs_kernel, tail_bound_abs_Q, exact_Q_l1_reference
from .piecewise import FunctionSpec, Partition, integrate_m_kernel
from .convolution import SequenceSpec, S_op, dirichlet_convolve, terre_sides
from .checks import (BoundReport, run_check, registry_names, landau_constant,
                     landau_lower_check, compose_headline, improved_landau)

__version__ = "0.1.0"

__all__ = [
    "ApproxValue", "RIGOROUS", "HEURISTIC",
    "MobiusTable", "sieve_range", "iter_segments",
    "SummatorySnapshot", "summatory", "abs_m_integrals",
    "ComplexParam", "zeta_em", "partial_power_sum",
    "KernelSpec", "kernel_eval", "kernel_eval_em", "kernel_bound",
    "integrate_abs_kernel", "sup_abs_kernel", "tail_bound_abs_Q", "exact_Q_l1_reference",
    "FunctionSpec", "Partition", "integrate_m_kernel",
    "SequenceSpec", "S_op", "dirichlet_convolve", "terre_sides",
    "BoundReport", "run_check", "registry_names", "landau_constant",
    "landau_lower_check", "compose_headline", "improved_landau",
    "__version__",
]
