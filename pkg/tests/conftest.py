import time
from dataclasses import dataclass, field

import numpy as np
import pytest

from trigmoment.analysis import analyze
from trigmoment.errors import RouteDisagreement
from trigmoment.instances import example_moments, random_instance

ACCEPTANCE_LINES = []


@dataclass
class Instance:
    moments: object
    generator: object
    analysis: object


@dataclass
class InstanceSet:
    indeterminate: list = field(default_factory=list)
    determinate: list = field(default_factory=list)
    disagreements: list = field(default_factory=list)
    seconds: float = 0.0


def make_instances(seed=20240601, n_indeterminate=200, n_determinate=40) -> InstanceSet:
    """Random instances from atomic measures, N <= 3, d <= 3.

    Draws until both quotas are met.  Instances where the two determinacy
    routes disagree are kept aside rather than dropped silently.
    """
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    out = InstanceSet()
    while len(out.indeterminate) < n_indeterminate or len(out.determinate) < n_determinate:
        m, mu = random_instance(rng)
        try:
            a = analyze(m)
        except RouteDisagreement:
            out.disagreements.append(m)
            continue
        (out.determinate if a.determinate else out.indeterminate).append(Instance(m, mu, a))
    out.seconds = time.perf_counter() - start
    return out


@pytest.fixture(scope="session")
def instance_set():
    return make_instances()


@pytest.fixture(scope="session")
def example():
    return analyze(example_moments())


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
