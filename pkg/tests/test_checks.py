import json
import math

import pytest

from moebius.approx import HEURISTIC, RIGOROUS
from moebius.checks import (BoundReport, compose_headline, improved_landau,
                            landau_constant, landau_lower_check, registry_names,
                            run_check, run_suite)
from moebius.errors import DomainError, InapplicabilityError
from moebius.report import reports_to_csv, reports_to_json


def test_landau_constant_values():
    c1 = landau_constant(complex(0.5, 14.134725141734694))
    assert abs(c1 - 0.0024933) < 1e-6
    c2 = landau_constant(complex(0.5, 14.13))
    assert abs(c2 - 0.0024949) < 1e-6
    assert landau_constant(1 + 0j) == 1.0  # |rho - 1| = 0
    with pytest.raises(DomainError):
        landau_constant(1.5 + 3j)


def test_compose_headline_values():
    assert compose_headline(4, 8.55e-6) == pytest.approx(3.42e-5)
    assert compose_headline(4, 8.55e-6) <= 3.5e-5
    assert compose_headline(4, 0.0) == 0.0
    assert compose_headline(2, 8.55e-6) == pytest.approx(1.71e-5)
    with pytest.raises(InapplicabilityError):
        compose_headline(4, 8.55e-6, x0=1e10)  # bound starts at 2.5e11 > x0


def test_improved_landau_values():
    rho = complex(0.5, 14.13)
    # the experimental inputs reproduce the quoted order: 1/(1+20.512) = 0.0465
    assert improved_landau(rho, 20.512, 9.4, 14.13) == pytest.approx(1 / 21.512)
    # generic sup on both ranges recovers the plain constant's scale
    assert improved_landau(rho, 399.9, 399.9, 14.13) == pytest.approx(1 / 400.9)
    assert improved_landau(rho, 0.0, 0.0, 14.13) == 1.0
    with pytest.raises(DomainError):
        improved_landau(rho, 20.0, 9.4, 10.0)  # T_split below |Im rho|
    with pytest.raises(DomainError):
        improved_landau(rho, -1.0, 9.4, 14.13)


def test_landau_lower_check_small():
    rep = landau_lower_check(10_000)
    assert rep.passed
    assert rep.cells[0]["constant"] == 0.0024933
    assert rep.cells[1]["constant"] == 0.0025
    assert rep.cells[1]["pass"]
    assert rep.payload["min_ratio"] > 0.0025


def test_registry_is_total():
    names = registry_names()
    for required in ["abel", "int-check", "mtronq", "mtronqch", "mtronqchch",
                     "derivK1", "derivK2", "derivK3", "mieux-1", "mieux-2",
                     "poids", "k1", "double-check-borne", "formule-m",
                     "exact-Q-l1", "prop1-a", "prop1-b", "prop1-c", "prop2-a",
                     "prop2-b", "prop2-c", "parm", "parchm", "poids-bound",
                     "balcheck", "balazard-m", "harmonic", "q-bounds", "alpha",
                     "m-conversions", "landau-lower", "hel-truncation",
                     "q-sup", "q-l1", "improved-landau"]:
        assert required in names, required


def test_unknown_check_rejected():
    with pytest.raises(DomainError):
        run_check("nonsense")


def test_identity_report_shape():
    rep = run_check("formule-m", grid={"x": [2.0, 10.0]})
    assert isinstance(rep, BoundReport)
    assert rep.kind == "identity" and rep.passed and rep.rigor == RIGOROUS
    assert len(rep.cells) == 2
    assert rep.worst <= 1e-30


def test_inequality_report_alpha():
    rep = run_check("alpha", grid={"tmax": 2000})
    assert rep.kind == "inequality" and rep.passed
    assert rep.worst >= -1e-12


def test_balcheck_small():
    rep = run_check("balcheck", grid={"xmax": 5000, "n_random": 100})
    assert rep.passed and rep.rigor == RIGOROUS
    # equality at x = 1: margin 0 there, so worst must be >= -radius only
    assert rep.worst >= -1e-12


def test_q_bounds_and_voyage():
    assert run_check("q-bounds").passed
    assert run_check("voyage").passed


def test_prop_checks_heuristic_rigor():
    rep = run_check("prop1-a", grid={"s": [2.0], "x": [1000.0], "sweep_N": 100_000})
    assert rep.rigor == HEURISTIC  # empirical window sup makes it heuristic
    assert rep.passed
    kinds = {c["form"] for c in rep.cells}
    assert kinds == {"identity", "inequality"}


def test_halfstep_and_mdcheck_adjudications():
    rep = run_check("halfstep", grid={"s": [2.0], "x": [30.0]})
    assert rep.passed
    assert rep.payload["matching_bracketing"] == ["sign-corrected"]
    rep2 = run_check("mdcheck-norm", grid={"xmax": 20_000})
    assert rep2.passed
    assert "2log t - 2gamma" in rep2.payload["verdict"]


def test_hel_truncation_short():
    rep = run_check("hel-truncation", grid={"n_t": 25, "trange": (10.0, 500.0)})
    assert rep.passed and rep.rigor == RIGOROUS
    assert rep.worst > 0


def test_exact_Q_l1_check():
    rep = run_check("exact-Q-l1", grid={"T": 100})
    assert rep.passed
    ref2 = [c for c in rep.cells if c["s"] == "2.0"][0]
    assert abs(ref2["reference"] + 0.0677184019) < 1e-9


def test_run_suite_threads_deterministic():
    names = ["alpha", "formule-m"]
    seq = run_suite(names, {"x": [2.0], "tmax": 500}, threads=1)
    par = run_suite(names, {"x": [2.0], "tmax": 500}, threads=4)
    assert [r.check for r in seq] == [r.check for r in par]
    assert seq[0].worst == par[0].worst


def test_report_serialization_roundtrip():
    reps = [run_check("formule-m", grid={"x": [2.0]}),
            run_check("alpha", grid={"tmax": 500})]
    js = reports_to_json(reps, stable=True)
    objs = json.loads(js)
    assert [o["check"] for o in objs] == ["formule-m", "alpha"]
    assert all(o["elapsed_ms"] == 0.0 for o in objs)
    assert set(objs[0]) == {"check", "grid", "worst", "location", "pass",
                            "rigor", "elapsed_ms"}
    csv_text = reports_to_csv(reps)
    assert csv_text.splitlines()[0].startswith("check,")
    assert len(csv_text.splitlines()) == 1 + len(reps[0].cells) + len(reps[1].cells)
