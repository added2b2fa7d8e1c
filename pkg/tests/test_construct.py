import math

import pytest

from cyclelens.construct import (
    ChordedCycleGraph,
    bcfy_construct,
    bcfy_for_order,
    cycle_lengths_closed_form,
    length_certificate,
    refined_upper_bound,
    within_refined_bound,
)
from cyclelens.cycles import enumerate_cycles, is_two_connected
from cyclelens.errors import InvalidInput, NotPrimePower, TooSmall
from cyclelens.sidon import is_sidon


def test_small_examples():
    g2 = bcfy_construct(2)
    assert (g2.n, g2.chord_positions, g2.graph.m) == (8, (1, 3, 7), 9)
    assert cycle_lengths_closed_form(g2) == (4, 6, 8)
    g3 = bcfy_construct(3)
    assert (g3.n, g3.chord_positions, g3.graph.m) == (14, (1, 3, 9, 13), 16)
    assert cycle_lengths_closed_form(g3) == (4, 6, 8, 10, 12, 14)
    with pytest.raises(NotPrimePower):
        bcfy_construct(6)


def test_plain_cycle_closed_form():
    assert cycle_lengths_closed_form(ChordedCycleGraph(8, (1, 7))) == (8,)


@pytest.mark.parametrize("bad", [(2, 7), (1, 5), (1, 3, 3, 7), (1,)])
def test_rejects_bad_positions(bad):
    with pytest.raises(InvalidInput):
        ChordedCycleGraph(8, bad)


def test_edge_audit():
    cg = bcfy_construct(4)
    n = cg.n
    ham = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    chords = {(0, a) for a in cg.chord_positions[1:-1]}
    assert set(cg.graph.edges) == ham | chords
    assert cg.excess == cg.k - 2


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_enumeration_matches_closed_form(q):
    cg = bcfy_construct(q)
    sp = enumerate_cycles(cg.graph)
    assert sp.distinct
    assert tuple(sorted(sp.lengths)) == cycle_lengths_closed_form(cg)
    assert sp.cycle_count == math.comb(q + 1, 2)
    assert is_two_connected(cg.graph)


def test_length_certificate_rows_are_cycles():
    cg = bcfy_construct(3)
    rows = length_certificate(cg)
    assert [r["length"] for r in rows] == list(cycle_lengths_closed_form(cg))
    for r in rows:
        cyc = r["cycle"]
        assert len(cyc) == r["length"]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert cg.graph.has_edge(a, b)


def test_for_order_exact_fits():
    assert bcfy_for_order(8) == bcfy_construct(2)
    assert bcfy_for_order(14) == bcfy_construct(3)
    with pytest.raises(TooSmall):
        bcfy_for_order(7)


@pytest.mark.parametrize("n", list(range(8, 60)) + [100, 150, 200])
def test_for_order_is_repeat_free(n):
    cg = bcfy_for_order(n)
    assert cg.n == n
    assert is_sidon(cg.chord_positions)
    sp = enumerate_cycles(cg.graph)
    assert sp.distinct
    assert tuple(sorted(sp.lengths)) == cycle_lengths_closed_form(cg)
    assert is_two_connected(cg.graph)
    assert within_refined_bound(cg.graph)


def test_n15_moves_largest_position():
    cg = bcfy_for_order(15)
    assert cg.chord_positions[-1] == 14
    assert cg.chord_positions[:-1] == bcfy_construct(3).chord_positions[:-1]


def test_refined_bound():
    assert refined_upper_bound(16) == pytest.approx(16 + 4 + 20 * math.sqrt(4))
    with pytest.raises(InvalidInput):
        refined_upper_bound(1)
