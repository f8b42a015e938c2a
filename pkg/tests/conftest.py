from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from strongembed.generate import generate_cubic_planar

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@lru_cache(maxsize=None)
def cubic(n):
    return tuple(generate_cubic_planar(n))


def cubic_upto(n):
    return [g for m in range(4, n + 1, 2) for g in cubic(m)]


@pytest.fixture(scope="session")
def small_cubic():
    return cubic_upto(10)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
