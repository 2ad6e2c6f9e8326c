import os
import sys

import mpmath as mp
import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long-running checks (acceptance sweeps)")


@pytest.fixture
def dps40():
    with mp.workdps(40):
        yield


@pytest.fixture
def dps60():
    with mp.workdps(60):
        yield
