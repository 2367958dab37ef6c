import random
from fractions import Fraction

import pytest

from parityfactors.graph import random_graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_acceptance():
    def record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def seeded_graphs(count, n_range, densities, seed0=0):
    """Deterministic stream of (seed, graph) pairs."""
    for seed in range(seed0, seed0 + count):
        rng = random.Random(seed)
        n = rng.randint(*n_range)
        p = rng.choice([Fraction(d) for d in densities])
        yield seed, random_graph(n, p, seed)
