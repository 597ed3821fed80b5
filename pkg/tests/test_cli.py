import json
import os
import subprocess
import sys

import pytest

from moebius.cli import main

RUN = [sys.executable, "-m", "moebius.cli"]


def run_cli(*args, env=None):
    e = dict(os.environ)
    if env:
        e.update(env)
    return subprocess.run([*RUN, *args], capture_output=True, text=True, env=e)


def test_compute_x10():
    r = run_cli("compute", "--x", "10", "--format", "csv")
    assert r.returncode == 0
    assert "M        = -1 (exact)" in r.stdout
    assert "0.09047619047619" in r.stdout


def test_compute_x1_trivial():
    r = run_cli("compute", "--x", "1")
    assert r.returncode == 0
    obj = json.loads(r.stdout)
    assert obj["M"] == 1
    assert obj["m"]["value"].startswith("1.0")


def test_compute_domain_error_exit2():
    assert run_cli("compute", "--x", "0.5").returncode == 2
    assert run_cli("compute", "--x", "10", "--precision", "20").returncode == 2


def test_compute_large_M_field():
    r = run_cli("compute", "--x", "1e6", "--fields", "M", "--mode", "fast")
    assert r.returncode == 0
    assert json.loads(r.stdout)["M"] == 212


def test_verify_exit_zero_and_json_schema():
    r = run_cli("verify", "--suite", "formule-m,alpha", "--stable-output")
    assert r.returncode == 0
    objs = json.loads(r.stdout)
    assert {o["check"] for o in objs} == {"formule-m", "alpha"}
    for o in objs:
        assert set(o) == {"check", "grid", "worst", "location", "pass",
                          "rigor", "elapsed_ms"}


def test_verify_unknown_suite_exit2():
    assert run_cli("verify", "--suite", "not-a-check").returncode == 2


def test_verify_deterministic_bytes():
    args = ("verify", "--suite", "alpha,q-bounds", "--stable-output")
    a, b = run_cli(*args), run_cli(*args)
    assert a.stdout == b.stdout
    assert a.stdout  # nonempty


def test_verify_csv_format():
    r = run_cli("verify", "--suite", "alpha", "--format", "csv")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0].startswith("check,")
    assert lines[1].startswith("alpha,")


def test_verify_grid_overrides():
    r = run_cli("verify", "--suite", "exact-Q-l1", "--s", "2", "--grid", "T=50",
                "--stable-output")
    assert r.returncode == 0
    (obj,) = json.loads(r.stdout)
    assert obj["pass"] is True
    assert obj["grid"]["T"] == 50


def test_landau_and_compose_outputs():
    r = run_cli("landau", "--rho", "0.5+14.134725i")
    assert r.returncode == 0
    assert abs(float(r.stdout) - 0.0024933) < 1e-6
    r = run_cli("compose", "--C", "4", "--c", "8.55e-6")
    assert float(r.stdout) == pytest.approx(3.42e-5)


def test_quad_output():
    r = run_cli("quad", "--s", "0.5+14.13i", "--T", "12", "--sup", "9.4",
                "--target-radius", "1e-2")
    assert r.returncode == 0
    assert "tail <= 0.783" in r.stdout  # 9.4/12
    assert "[rigorous]" in r.stdout


def test_sieve_cache_cli(tmp_path):
    r = run_cli("sieve-cache", "--hi", "50000", "--cache-dir", str(tmp_path))
    assert r.returncode == 0
    path = r.stdout.strip()
    assert path.endswith("mobs_1_50000.bin")
    r2 = run_cli("sieve-cache", "--inspect", path)
    assert "mu(1..50000)" in r2.stdout
    assert "1, -1, -1, 0, -1, 1, -1, 0, 0, 1" in r2.stdout


def test_cache_dir_env(tmp_path):
    r = run_cli("sieve-cache", "--hi", "10000",
                env={"MOEBIUS_CACHE_DIR": str(tmp_path)})
    assert r.returncode == 0
    assert str(tmp_path) in r.stdout


def test_config_file(tmp_path):
    cfg = tmp_path / "moebius.cfg"
    cfg.write_text("precision = 96\nthreads = 2\n")
    r = run_cli("--config", str(cfg), "compute", "--x", "10")
    assert r.returncode == 0
    # flags must beat the config
    r2 = run_cli("--config", str(cfg), "--precision", "20", "compute", "--x", "10")
    assert r2.returncode == 2


def test_main_in_process():
    assert main(["compute", "--x", "2"]) == 0
    assert main(["verify", "--suite", "alpha"]) == 0


def test_suite_exit_code_contract():
    from moebius.checks import BoundReport
    from moebius.cli import suite_exit_code
    ok = BoundReport("a", {}, 0.0, {}, True, "rigorous", 0.0)
    heur_fail = BoundReport("b", {}, -1.0, {}, False, "heuristic", 0.0)
    rig_fail = BoundReport("c", {}, -1.0, {}, False, "rigorous", 0.0)
    assert suite_exit_code([ok]) == 0
    assert suite_exit_code([ok, heur_fail]) == 3
    assert suite_exit_code([ok, heur_fail, rig_fail]) == 1


def test_verify_spec_example_invocations():
    r = run_cli("verify", "--suite", "balcheck", "--xmax", "20000")
    assert r.returncode == 0
    r = run_cli("verify", "--suite", "exact-Q-l1", "--s", "2", "--grid", "T=200")
    assert r.returncode == 0
