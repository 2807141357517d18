"""Test suite for the command line interface."""

__author__ = "pycutoff contributors"
__status__ = "Development"

import json
import os
import pathlib

import pytest

from pycutoff.cli import main
from pycutoff.exceptions import PyCutoffWarning


def setup_module():
    print("\n")
    print("==================")
    print("| Test Suite CLI |")
    print("==================")


def get_parent_directory():
    """Helper function to get path of current file"""
    return pathlib.Path(__file__).parent.absolute()


def resource(name: str) -> str:
    with open(os.path.join(get_parent_directory(), "resources", name), "r") as f:
        return f.read()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


invocations = {
    "char-ratio": ["char-ratio", "--n", "6", "--k", "3", "--lambda", "3,2,1"],
    "char-table": ["char-table", "--n", "4"],
    "asym": ["asym", "--n", "8", "--k", "3", "--all"],
    "tv": ["tv", "--n", "5", "--k", "3", "--t", "2"],
    "cutoff": ["cutoff", "--n", "5", "--k", "2", "--t-max", "4"],
    "lower-bound": ["lower-bound", "--n", "8", "--k", "2", "--t", "2"],
    "simulate": ["simulate", "--n", "5", "--k", "3", "--t", "2", "--samples", "2000", "--seed", "1"],
    "verify": ["verify", "--suite", "dimensions", "--n-max", "6"],
}


###############
# golden runs #
###############


def test_char_ratio_text(capsys):
    code, out, _ = run(capsys, "char-ratio", "--n", "5", "--k", "2", "--lambda", "4,1")
    assert code == 0
    assert out.strip() == "1/2"


@pytest.mark.parametrize("method", ["residue", "mn", "general", "contour"])
def test_char_ratio_methods(capsys, method):
    code, out, _ = run(capsys, "char-ratio", "--n", "7", "--k", "3", "--lambda", "4,2,1", "--method", method)
    assert code == 0
    assert out.strip() == "-1/35"


def test_char_ratio_json(capsys):
    code, out, _ = run(capsys, "char-ratio", "--n", "5", "--k", "2", "--lambda", "4,1", "--format", "json")
    assert code == 0
    assert json.loads(out) == json.loads(resource("char_ratio.json"))


def test_char_table_csv(capsys):
    code, out, _ = run(capsys, "char-table", "--n", "3", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines() == resource("char_table_3.csv").strip().splitlines()


def test_tv_json(capsys):
    code, out, _ = run(capsys, "tv", "--n", "4", "--k", "2", "--t", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == json.loads(resource("tv_4_2_1.json"))


def test_lower_bound_json(capsys):
    code, out, _ = run(capsys, "lower-bound", "--n", "8", "--k", "2", "--t", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["j"], data["mean"], data["second_moment"], data["variance"]) == (1, "25/7", "94/7", "33/49")
    assert data["tv_lower"] == pytest.approx(0.482, abs=1e-3)


def test_cutoff_csv(capsys):
    code, out, _ = run(capsys, "cutoff", "--n", "5", "--k", "2", "--t-max", "4", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "t,coset_sign,tv_exact,tv_exact_float,tv_upper,tv_lower"
    assert len(lines) == 6


def test_simulate_json(capsys):
    code, out, _ = run(capsys, *invocations["simulate"], "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert sum(row["count"] for row in data["histogram"]) == 2000
    assert 0.0 <= data["empirical_tv"] <= 0.1


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle-equivalence", "--n-max", "6", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["suite"] == "oracle-equivalence"
    assert data["failed"] == 0
    assert data["passed"] > 0


@pytest.mark.parametrize("cmd", sorted(invocations))
def test_json_schemas(capsys, cmd):
    schemas = json.loads(resource("schemas.json"))
    code, out, _ = run(capsys, *invocations[cmd], "--format", "json")
    assert code == 0
    assert list(json.loads(out)) == schemas[cmd]


@pytest.mark.parametrize("cmd", sorted(invocations))
def test_text_output(capsys, cmd):
    code, out, _ = run(capsys, *invocations[cmd])
    assert code == 0
    assert out.strip()


##########
# errors #
##########


@pytest.mark.parametrize("argv", [
    ["char-ratio", "--n", "5", "--k", "2"],
    ["char-ratio", "--n", "5", "--k", "2", "--lambda", "2,3"],
    ["tv", "--n", "5", "--k", "2", "--t", "1", "--format", "yaml"],
    ["simulate", "--bogus"],
    ["no-such-command"],
    ["tv", "--n", "4", "--k", "3", "--t", "-1"],
    ["lower-bound", "--n", "8", "--k", "2", "--t", "-1"],
    ["char-table", "--n", "3", "--config", "missing/pycutoff.yaml"],
])
def test_invalid_arguments(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


@pytest.mark.parametrize("argv", [
    ["char-ratio", "--n", "5", "--k", "6", "--lambda", "5"],
    ["char-ratio", "--n", "6", "--k", "2", "--lambda", "4,1"],
    ["char-table", "--n", "15"],
    ["tv", "--n", "15", "--k", "2", "--t", "1"],
    ["lower-bound", "--n", "8", "--k", "3", "--j", "1", "--t", "2"],
    ["verify", "--suite", "no-such-suite"],
    ["verify", "--suite", "cutoff", "--n-max", "8"],
    ["verify", "--suite", "no-such-suite", "--n-max", "8"],
    ["char-table", "--n", "4", "--workers", "0"],
])
def test_refused_requests(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert not out
    assert "error" in err


def test_failing_suite(capsys):
    from pycutoff.verification import SuiteReport, suites

    def failing(**kwargs):
        report = SuiteReport("always-fails")
        report.check(False, "deliberate failure")
        return report

    suites["always-fails"] = failing
    try:
        code, out, _ = run(capsys, "verify", "--suite", "always-fails", "--format", "json")
    finally:
        suites.pop("always-fails")
    assert code == 1
    assert json.loads(out)["failures"] == ["deliberate failure"]


###########
# options #
###########


def test_out_file(capsys, tmp_path):
    out_file = os.path.join(str(tmp_path), "results", "ratio.json")
    code, out, _ = run(capsys, "char-ratio", "--n", "5", "--k", "2", "--lambda", "4,1", "--format", "json",
                       "--out", out_file)
    assert code == 0
    assert not out
    with open(out_file, "r") as f:
        assert json.load(f) == json.loads(resource("char_ratio.json"))


def test_unsafe_caps(capsys):
    with pytest.warns(PyCutoffWarning):
        code, _, _ = run(capsys, "char-ratio", "--n", "5", "--k", "2", "--lambda", "4,1", "--unsafe-caps")
    assert code == 0


def test_config_file(capsys, tmp_path):
    path = tmp_path / "small.yaml"
    path.write_text("Caps:\n"
                    "  base: CapsConfig\n"
                    "  table_n_max: 3\n")
    code, _, err = run(capsys, "char-table", "--n", "4", "--config", str(path))
    assert code == 2
    assert "cap" in err
    code, _, _ = run(capsys, "char-table", "--n", "3", "--config", str(path))
    assert code == 0


def test_workers_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PYCUTOFF_WORKERS", "2")
    code, out, _ = run(capsys, *invocations["simulate"], "--format", "json")
    assert code == 0
    assert json.loads(out)["workers"] == 2
