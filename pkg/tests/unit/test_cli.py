"""Tests of the command line, run as ``python -m perlab``."""

import json
import os
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]

SMALL_DOC = """
(universe (terms 1))
(fuel 2000)
(per E (classes))
(per A (carrier 0) (classes (0)))
(per B (carrier 0 1) (classes (0) (1)))
(functor ConstA (const A))
(functor Id id)
(family chain E A B)
(assert (subper A B))
"""


def run(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "perlab", *args],
        cwd=ROOT,
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        universal_newlines=True,
        check=False,
        env=env,
    )


def write(tmp_path, text, name="lab.wb"):
    path = tmp_path / name
    path.write_text(text, encoding="utf8")
    return str(path)


def test_tutorial_path():
    proc = run("tutorial")
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("tutorial.wb")


def test_tutorial_is_deterministic():
    first = run("--format", "json", "check", "perlab/tutorial.wb")
    second = run("--format", "json", "check", "perlab/tutorial.wb")
    assert first.stdout == second.stdout
    info = json.loads(first.stdout)
    assert info["budget"] == {"universe": "terms:2", "fuel": 10000}
    assert all(check["ms"] is None for check in info["checks"])
    names = [check["name"] for check in info["checks"]]
    assert "run check-all: pca-laws" in names
    for check in info["checks"]:
        if not check["name"].startswith("run check-all"):
            assert check["status"] == "pass", check


def test_failing_check(tmp_path):
    source = write(tmp_path, SMALL_DOC + "(assert (subper B A))\n")
    proc = run("check", source)
    assert proc.returncode == 1
    assert "1 is in B but not in A" in proc.stdout
    assert "1 passed, 1 failed, 0 undecided" in proc.stdout


def test_flags_override_the_document(tmp_path):
    source = write(tmp_path, SMALL_DOC)
    proc = run("check", source, "--format", "json", "--fuel", "300", "--universe", "codes:5")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["budget"] == {"universe": "codes:5", "fuel": 300}


def test_fuel_from_the_environment(tmp_path):
    source = write(tmp_path, "(per A (carrier 0) (classes (0)))\n(assert (subper A A))\n")
    env = dict(os.environ, PERLAB_FUEL="123")
    proc = run("--format", "json", "check", source, env=env)
    assert json.loads(proc.stdout)["budget"]["fuel"] == 123


def test_timings(tmp_path):
    source = write(tmp_path, SMALL_DOC)
    proc = run("--format", "json", "--timings", "check", source)
    (check,) = json.loads(proc.stdout)["checks"]
    assert isinstance(check["ms"], int)


def test_fixpoint_command(tmp_path):
    source = write(tmp_path, SMALL_DOC)
    proc = run("fixpoint", source, "--functor", "ConstA", "--trace")
    assert proc.returncode == 0
    assert "run fixpoint ConstA" in proc.stdout
    assert "fixobject A after 2 iterations" in proc.stdout
    assert "(subper A B)" not in proc.stdout


def test_monotonize_command(tmp_path):
    source = write(tmp_path, SMALL_DOC)
    proc = run("monotonize", source, "--functor", "Id", "--family", "chain")
    assert proc.returncode == 0
    assert "yoneda iso" in proc.stdout


def test_usage_errors(tmp_path):
    proc = run("check", "no/such/file.wb")
    assert proc.returncode == 2
    assert "does not exist" in proc.stderr

    source = write(tmp_path, "(per A (classes (0))\n")
    proc = run("check", source)
    assert proc.returncode == 2
    assert "line 1, column 1" in proc.stderr

    source = write(tmp_path, SMALL_DOC, "ok.wb")
    proc = run("fixpoint", source, "--functor", "Nope")
    assert proc.returncode == 2

    proc = run("check", source, "--fuel", "0")
    assert proc.returncode == 2


def test_version():
    proc = run("--version")
    assert proc.returncode == 0
    assert "perlab version" in proc.stdout
