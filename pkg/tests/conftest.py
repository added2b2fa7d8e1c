import random
import sys
from functools import lru_cache

import pytest

from cyclelens.construct import bcfy_construct
from cyclelens.generate import random_two_connected


@lru_cache(maxsize=None)
def random_corpus(count=120, seed=0):
    """Seeded 2-connected graphs, 6 <= n <= 40, at most 8 ears past the first
    cycle, each with a randomly chosen base edge."""
    out = []
    for k in range(count):
        r = random.Random(seed * 100_003 + k)
        n = r.randint(6, 40)
        g = random_two_connected(n, r.randint(0, 8), seed=k)
        out.append((f"rand{k}", g, g.edges[r.randrange(g.m)]))
    return tuple(out)


@lru_cache(maxsize=None)
def bcfy_corpus(qs=(2, 3, 4, 5)):
    return tuple((f"bcfy{q}", bcfy_construct(q).graph, (0, 1)) for q in qs)


@pytest.fixture(scope="session")
def corpus():
    return random_corpus() + bcfy_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus(30, seed=1) + bcfy_corpus((2, 3))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
