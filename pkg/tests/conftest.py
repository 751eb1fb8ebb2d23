import random

import pytest

from justaudit import build_population
from justaudit.fixtures import (
    maximin_divergence,
    sufficientarian_divergence,
    wages_dist1,
    wages_dist2,
)

ACCEPTANCE_KEY = pytest.StashKey[dict]()


def random_population(rng: random.Random, max_n: int = 200, max_groups: int = 5, lo=-50.0, hi=150.0):
    """Random population with unique ids, 1..max_groups labels and n in [1, max_n]."""
    n = rng.randint(1, max_n)
    n_groups = rng.randint(1, max_groups)
    labels = [f"g{i}" for i in range(n_groups)]
    # coarse grid so ties at the worst-off boundary actually occur
    rows = [(f"r{i:04d}", rng.choice(labels), round(rng.uniform(lo, hi), rng.choice([0, 2]))) for i in range(n)]
    return build_population(rows)


@pytest.fixture
def wages1():
    return wages_dist1()


@pytest.fixture
def wages2():
    return wages_dist2()


@pytest.fixture
def suff_fixture():
    return sufficientarian_divergence()


@pytest.fixture
def maximin_fixture():
    return maximin_divergence()


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(num, title): exit criterion")
    config.stash[ACCEPTANCE_KEY] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or report.failed:
        num, title = marker.args
        item.config.stash[ACCEPTANCE_KEY][num] = (title, report.passed)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(ACCEPTANCE_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        title, ok = results[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] AC{num}: {title}")
