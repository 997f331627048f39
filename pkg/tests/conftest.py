import random
from fractions import Fraction

import pytest

from beliefcond.generators import random_belief

ACCEPTANCE_LINES = []


def naive_subset_sum(values):
    """O(4^n) subset summation, independent of the fast transform."""
    size = len(values)
    return [sum((values[b] for b in range(size) if b & ~a == 0), Fraction(0)) for a in range(size)]


def naive_mobius(values):
    size = len(values)
    out = []
    for a in range(size):
        total = Fraction(0)
        for b in range(size):
            if b & ~a == 0:
                sign = -1 if bin(a & ~b).count("1") % 2 else 1
                total += sign * values[b]
        out.append(total)
    return out


def sweep_beliefs(count, seed=0, sizes=(2, 3, 4, 5, 6), max_focal=8):
    """Deterministic stream of (seed, belief) pairs for property sweeps."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.choice(sizes)
        focal = rng.randint(1, min(max_focal, (1 << n) - 1))
        s = rng.randrange(1 << 30)
        yield s, random_belief(s, n, focal)


@pytest.fixture
def prisoners():
    from beliefcond.scenarios import three_prisoners

    return three_prisoners()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
