"""Pytest module-wide configuration file."""

import os

import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweeps and large Monte Carlo runs (run by default)")


@pytest.fixture(autouse=True)
def run_around_tests():
    # Find and save current (test) working directory
    cwd = os.getcwd()
    # A test function will be run at this point
    yield
    # revert changes to working directory and drop loaded configurations
    os.chdir(cwd)
    from pycutoff import config
    config.clear_cache()
