from fractions import Fraction

import mpmath
import pytest
from mpmath import mpf

from moebius.convolution import (S_op, SequenceSpec, dirichlet_convolve,
                                 terre_sides, voyage_sides)
from moebius.errors import CoverageError, DomainError
from moebius.piecewise import FunctionSpec
from moebius.summatory import summatory
from oracles import riemann_convolution_side
import numpy as np


def test_sequencespec_validation():
    with pytest.raises(DomainError):
        SequenceSpec(name="mobius", table=(1, 2))
    with pytest.raises(DomainError):
        SequenceSpec(name="nope")
    with pytest.raises(DomainError):
        SequenceSpec()


def test_named_sequences_match_definitions():
    mob = SequenceSpec.named("mobius").values(12)
    assert mob == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert SequenceSpec.named("one").values(4) == [1, 1, 1, 1]
    assert SequenceSpec.named("alternating").values(5) == [1, -1, 1, -1, 1]
    assert SequenceSpec.named("harmonic").values(3) == [1, Fraction(1, 2), Fraction(1, 3)]


def test_dirichlet_identity_element():
    mob = SequenceSpec.named("mobius")
    one = SequenceSpec.named("one")
    assert dirichlet_convolve(mob, one, 40) == [1] + [0] * 39


def test_dirichlet_divisor_counts():
    one = SequenceSpec.named("one")
    assert dirichlet_convolve(one, one, 6) == [1, 2, 2, 3, 2, 4]


def test_dirichlet_harmonic_bruteforce():
    mob = SequenceSpec.named("mobius")
    har = SequenceSpec.named("harmonic")
    conv = dirichlet_convolve(mob, har, 12)
    mobv = mob.values(12)
    for n in (6, 10, 12):
        brute = sum(Fraction(mobv[d - 1], n // d) for d in range(1, n + 1) if n % d == 0)
        assert conv[n - 1] == brute


def test_S_op_examples():
    one = SequenceSpec.named("one")
    mob = SequenceSpec.named("mobius")
    assert S_op(one, FunctionSpec.const(1.0), 7.3).value == 7
    assert S_op(mob, FunctionSpec.const(1.0), 10.0).value == -1
    # S over mu(n)/n with log kernel = the log-smoothed sum m-check
    N = 50
    mobn = SequenceSpec.explicit([Fraction(m, n) if m else 0
                                  for n, m in enumerate(mob.values(N), start=1)])
    got = S_op(mobn, FunctionSpec.log(1), 50.0)
    want = summatory(50.0, mode="mp").m_check
    assert abs(got.value - want.value) <= got.radius + want.radius


def test_S_op_coverage_error():
    short = SequenceSpec.explicit([1, 1])
    with pytest.raises(CoverageError):
        S_op(short, FunctionSpec.const(1.0), 5.0)


def test_terre_formule_m_instance():
    mob, one = SequenceSpec.named("mobius"), SequenceSpec.named("one")
    lhs, rhs = terre_sides(mob, one, FunctionSpec.power(1.0),
                           FunctionSpec.power(-1.0, 2.0), 10.0)
    assert abs(lhs.value - rhs.value) <= lhs.radius + rhs.radius
    # both sides equal x(1 - 1/x^2) at x = 10
    assert abs(lhs.value - mpf(99) / 10) <= lhs.radius + 1e-30


def test_terre_trivial_empty():
    one = SequenceSpec.named("one")
    lhs, rhs = terre_sides(one, one, FunctionSpec.const(1.0), FunctionSpec.const(1.0), 1.0)
    assert lhs.value == 0 and rhs.value == 0


def test_terre_complex_kernels_high_precision():
    mob, one = SequenceSpec.named("mobius"), SequenceSpec.named("one")
    lhs, rhs = terre_sides(mob, one, FunctionSpec.t_log(1),
                           FunctionSpec.power(2.0), 50.0)
    assert abs(lhs.value - rhs.value) <= lhs.radius + rhs.radius


def test_terre_against_riemann_oracle():
    # one cell cross-checked against a brute-force fine-grid midpoint sum
    mob, one = SequenceSpec.named("mobius"), SequenceSpec.named("one")
    x = 20.0
    lhs, _ = terre_sides(mob, one, FunctionSpec.t_log(1), FunctionSpec.power(2.0), x)
    brute = riemann_convolution_side(
        mob.values(20), one.values(20),
        lambda u: u * np.log(u), lambda u: u**2, x, n_pts=800_000)
    assert abs(float(lhs.value) - brute) < 2e-3 * abs(brute)


def test_terre_matrix_small():
    seqs = [SequenceSpec.named(n) for n in ("mobius", "one", "alternating")]
    kernels = [(FunctionSpec.const(1.0), FunctionSpec.const(1.0)),
               (FunctionSpec.power(1.0), FunctionSpec.power(complex(0.5, 3.0)))]
    for a in seqs:
        for b in seqs:
            for om, ph in kernels:
                lhs, rhs = terre_sides(a, b, om, ph, 10.0)
                assert abs(lhs.value - rhs.value) <= lhs.radius + rhs.radius


def test_voyage_symmetry():
    for om, ph in [(FunctionSpec.power(1.0), FunctionSpec.power(2.0)),
                   (FunctionSpec.t_log(1), FunctionSpec.power(complex(0.5, 3.0)))]:
        lhs, rhs = voyage_sides(om, ph, 50.0)
        assert abs(lhs.value - rhs.value) <= lhs.radius + rhs.radius
