import pytest
from hypothesis import given, settings, strategies as st

from cyclelens.cycles import is_two_connected
from cyclelens.generate import random_two_connected


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 40), st.integers(0, 8), st.integers(0, 10**6))
def test_two_connected_with_requested_size(n, extra, seed):
    if extra > n * (n - 1) // 2 - n:
        return
    g = random_two_connected(n, extra, seed=seed)
    assert g.n == n
    assert g.m == n + extra
    assert is_two_connected(g)


def test_seeded():
    assert random_two_connected(20, 4, seed=3) == random_two_connected(20, 4, seed=3)
    assert random_two_connected(20, 4, seed=3) != random_two_connected(20, 4, seed=4)
