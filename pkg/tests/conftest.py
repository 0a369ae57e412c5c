import itertools

import numpy as np
import pytest

from rggdim import from_edge_pairs

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def complete(n):
    return from_edge_pairs(n, itertools.combinations(range(n), 2))


def star(leaves):
    return from_edge_pairs(leaves + 1, [(0, k) for k in range(1, leaves + 1)])


def cycle(n):
    return from_edge_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def erdos_renyi(n, p, rng):
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return from_edge_pairs(n, zip(*np.nonzero(upper)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
