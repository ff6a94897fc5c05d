import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from hyperspec.cli import run

FIXTURES = Path(__file__).parent / "fixtures"


def run_module(*args, cwd=FIXTURES):
    return subprocess.run([sys.executable, "-m", "hyperspec", *args], capture_output=True, text=True, cwd=cwd)


def run_inproc(*args):
    out = io.StringIO()
    code = run(list(args), out=out)
    return code, out.getvalue()


def test_help_lists_defaults():
    cp = run_module("eig", "--help")
    assert cp.returncode == 0
    assert "default: Q" in cp.stdout and "default: 1e-10" in cp.stdout


def test_gen_sunflower():
    code, out = run_inproc("gen", "sunflower", "--d", "2", "--k", "3")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 5 and len(data["edges"]) == 2 and data["k"] == 3


@pytest.mark.parametrize("golden", sorted(p.name for p in FIXTURES.glob("eig_*.golden.json")))
def test_eig_golden(golden):
    spec = json.loads((FIXTURES / golden).read_text())
    cp = run_module(*spec["command"])
    assert cp.returncode == 0, cp.stderr
    got = json.loads(cp.stdout)
    for key, want in spec["expected"].items():
        if isinstance(want, list):
            assert all(abs(a - b) <= spec["tolerance"] for a, b in zip(got[key], want))
        else:
            assert abs(got[key] - want) <= spec["tolerance"], key


def test_scan_golden():
    spec = json.loads((FIXTURES / "scan_p3_q.golden.json").read_text())
    cp = run_module(*spec["command"])
    assert cp.returncode == 0, cp.stderr
    rows = list(csv.reader(io.StringIO(cp.stdout)))
    assert rows[0] == spec["header"]
    assert cp.stdout.splitlines()[1].startswith("2,3.0,")
    for line, want in zip(rows[1:], spec["rows"]):
        assert int(line[0]) == want["k"]
        assert abs(float(line[1]) - want["lambda"]) <= spec["tolerance"]
        assert float(line[2]) <= float(line[1]) <= float(line[3])
    assert len(rows) - 1 == len(spec["rows"])


def test_scan_json():
    code, out = run_inproc("scan", "--input", str(FIXTURES / "p3.json"), "--k-to", "5")
    assert code == 0
    data = json.loads(out)
    assert data["is_strictly_decreasing"] and data["above_limit"] and data["limit_target"] == 2.0


def test_gen_roundtrips_into_eig_and_scan(tmp_path):
    code, out = run_inproc("gen", "star", "--d", "3")
    assert code == 0
    graph = tmp_path / "s3.json"
    graph.write_text(out)
    code, out = run_inproc("gen", "power", "--input", str(graph), "--k", "4")
    assert code == 0
    power = tmp_path / "s3_4.json"
    power.write_text(out)
    code, eig = run_inproc("eig", "--input", str(power))
    assert code == 0
    code, scan = run_inproc("scan", "--input", str(graph), "--k-to", "4", "--format", "csv")
    assert code == 0
    last = scan.strip().splitlines()[-1].split(",")
    assert abs(float(last[1]) - json.loads(eig)["lambda"]) < 1e-9


def test_gen_generalized_power(tmp_path):
    graph = tmp_path / "p3.json"
    graph.write_text((FIXTURES / "p3.json").read_text())
    code, out = run_inproc("gen", "power", "--input", str(graph), "--k", "6", "--s", "2")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 10 and len(data["edges"]) == 2


def test_stdin_input():
    text = (FIXTURES / "s2_4.txt").read_text()
    cp = subprocess.run([sys.executable, "-m", "hyperspec", "eig", "--input", "-"], input=text, capture_output=True, text=True)
    assert cp.returncode == 0
    assert abs(json.loads(cp.stdout)["lambda"] - 2.543689012692072) < 1e-8


def test_output_is_byte_identical():
    args = ("scan", "--input", "p3.json", "--k-to", "6", "--format", "csv")
    first = run_module(*args).stdout
    assert first and run_module(*args).stdout == first
    args = ("eig", "--tensor", "A", "--input", "s2_4.txt")
    assert run_module(*args).stdout == run_module(*args).stdout


@pytest.mark.parametrize(
    "args, code",
    [
        (("eig", "--input", "s1_3.json"), 0),
        (("verify", "remark"), 0),
        (("eig", "--input", "bad_edge.json"), 2),
        (("eig", "--input", "missing.json"), 2),
        (("eig", "--tensor", "L", "--input", "k5_4.txt"), 2),
        (("eig", "--bogus-flag", "--input", "s1_3.json"), 2),
        (("frobnicate",), 2),
        (("eig", "--input", "s1_3.json", "--tol", "-1"), 2),
        (("eig", "--input", "s2_4.txt", "--max-iter", "2"), 3),
        (("scan", "--input", "p3.json", "--k-to", "5", "--max-iter", "3"), 3),
        (("verify", "monotonicity", "--max-iter", "3"), 1),
    ],
)
def test_exit_codes(args, code):
    cp = run_module(*args)
    assert cp.returncode == code, cp.stderr


def test_nonconvergence_prints_enclosure():
    cp = run_module("eig", "--input", "s2_4.txt", "--max-iter", "2")
    data = json.loads(cp.stdout)
    assert data["lower"] <= data["lambda"] <= data["upper"]
    assert "max_iter" in data["flags"]


def test_bad_edge_message():
    cp = run_module("eig", "--input", "bad_edge.json")
    assert "repeated vertex in edge 0" in cp.stderr


@pytest.mark.parametrize("suite", ["monotonicity", "power-adjacency", "components", "odd-bipartite", "remark"])
def test_verify_suites_pass(suite):
    code, out = run_inproc("verify", suite)
    assert code == 0
    reports = json.loads(out)
    assert reports and all(r["passed"] for r in reports)


def test_verify_csv():
    code, out = run_inproc("verify", "odd-bipartite", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["name", "passed", "quantity", "measured", "expected", "tolerance"]
    assert any(r[0] == "odd-bipartite[K5(4)]" and r[3] == "false" for r in rows[1:])
