"""Test suite for the named invariant suites."""

__author__ = "pycutoff contributors"
__status__ = "Development"

import inspect

import pytest

from pycutoff import config
from pycutoff.verification import SuiteReport, suites, register_suite, run_suite, suite_parameters


def setup_module():
    print("\n")
    print("===========================")
    print("| Test Suite Verification |")
    print("===========================")


def test_suite_report():
    report = SuiteReport("demo")
    report.check(True, "first")
    report.check(False, "second")
    assert (report.passed, report.failed) == (1, 1)
    assert not report.ok
    assert report.to_dict() == {"suite": "demo", "passed": 1, "failed": 1, "failures": ["second"]}


def test_registry():
    assert set(suites) == {"oracle-equivalence", "dimensions", "small-characters", "part-a-exactness", "mt-bound",
                           "power-sum", "mixing-criterion", "part-c-convergence", "moments", "tv-sandwich",
                           "cutoff", "monte-carlo"}
    with pytest.raises(ValueError):
        run_suite("no-such-suite")
    with pytest.raises(UserWarning):
        register_suite("dimensions")(lambda **kwargs: SuiteReport("dimensions"))


def test_suite_parameters():
    assert "n_max" in suite_parameters("dimensions")
    assert "table_n_max" in suite_parameters("dimensions")
    for name in ("mixing-criterion", "part-c-convergence", "moments", "cutoff", "monte-carlo"):
        assert "n_max" not in suite_parameters(name)
    assert "kwargs" not in suite_parameters("cutoff")
    with pytest.raises(ValueError):
        suite_parameters("no-such-suite")


def test_monte_carlo_defaults():
    defaults = inspect.signature(suites["monte-carlo"]).parameters
    assert defaults["tolerance"].default == 0.01
    walk = config.walk(defaults["walk"].default)
    assert (walk.n, walk.k, walk.t, walk.samples) == (8, 3, 8, 10 ** 6)


@pytest.mark.parametrize("name, kwargs", [
    ("oracle-equivalence", {"n_max": 7}),
    ("dimensions", {"n_max": 10, "table_n_max": 7}),
    ("small-characters", {"n_max": 8}),
    ("part-a-exactness", {"n_max": 11}),
    ("mt-bound", {"n_max": 11}),
    ("power-sum", {"n_max": 11}),
    ("mixing-criterion", {"ns": (8,)}),
    ("moments", {"ns": (6,), "t_max": 4}),
    ("tv-sandwich", {"n_max": 7, "t_max": 10}),
    ("cutoff", {}),
    ("monte-carlo", {"samples": 20000, "tolerance": 0.03}),
])
def test_quick_suites(name, kwargs):
    report = run_suite(name, **kwargs)
    assert report.ok, report.failures
    assert report.passed > 0


@pytest.mark.slow
@pytest.mark.parametrize("name", ["oracle-equivalence", "dimensions", "part-a-exactness", "mt-bound", "power-sum",
                                  "mixing-criterion", "part-c-convergence", "tv-sandwich",
                                  "monte-carlo"])
def test_full_suites(name):
    report = run_suite(name, verbose=True)
    assert report.ok, report.failures
