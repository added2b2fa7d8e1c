import pytest

from cyclelens.construct import bcfy_construct
from cyclelens.ears import analyze
from cyclelens.errors import BudgetExceeded
from cyclelens.graph import Graph
from cyclelens.props import (
    ALL_CHECKS,
    CONDITIONAL,
    UNCONDITIONAL,
    check_propositions,
    few_cycles,
    increasing_paths,
    tree_parts_acyclic,
    trichotomy,
)


def test_unconditional_checks_on_corpus(corpus):
    for name, g, uv in corpus:
        fam = analyze(g, uv)
        for c in check_propositions(fam, UNCONDITIONAL):
            assert c.passed, (name, c.name, c.violations[:2])


def test_conditional_checks_when_few_cycles(corpus):
    applicable = 0
    for name, g, uv in corpus:
        fam = analyze(g, uv)
        checks = check_propositions(fam, CONDITIONAL)
        if few_cycles(fam):
            applicable += 1
            for c in checks:
                assert c.skipped is None
                assert c.passed, (name, c.name, c.violations[:2])
        else:
            assert all(c.skipped for c in checks)
    assert applicable >= 10


def test_checks_examine_something(corpus):
    totals = dict.fromkeys(ALL_CHECKS, 0)
    for name, g, uv in corpus:
        for c in check_propositions(analyze(g, uv), force_conditional=True, budget=10**6):
            totals[c.name] += c.checked
    assert all(totals[k] > 0 for k in ALL_CHECKS), totals


def test_bcfy_graphs_pass_everything():
    for q in (2, 3, 4, 5):
        fam = analyze(bcfy_construct(q).graph, (0, 1))
        assert few_cycles(fam)
        for c in check_propositions(fam):
            assert c.passed and not c.skipped, (q, c.name)


def test_few_cycles_threshold():
    assert few_cycles(analyze(Graph.cycle(5), (0, 1)))
    assert not few_cycles(analyze(Graph.complete(4), (0, 1)))


def test_checkers_detect_corruption():
    # break monotonicity and the path shape by reversing the interior of f_1
    fam = analyze(bcfy_construct(3).graph, (0, 1))
    p = fam.paths[1]
    fam.paths = fam.paths[:1] + (p[:1] + tuple(reversed(p[1:-1])) + p[-1:],) + fam.paths[2:]
    assert not increasing_paths(fam).passed


def test_tree_check_detects_cycle():
    fam = analyze(bcfy_construct(3).graph, (0, 1))
    # force L_1 and R_1 to share a closed walk by pretending R_1 equals f_1
    whole = fam.edge_sets[1]
    fam.__dict__["r_parts"] = tuple(whole | {(0, 1)} for _ in fam.r_parts)
    fam.__dict__["l_parts"] = tuple(whole for _ in fam.l_parts)
    assert not tree_parts_acyclic(fam).passed


def test_trichotomy_on_k4_variants():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5)])
    for uv in g.edges:
        assert trichotomy(analyze(g, uv)).passed


def test_budget_propagates():
    fam = analyze(bcfy_construct(5).graph, (0, 1))
    with pytest.raises(BudgetExceeded):
        check_propositions(fam, ["feasible_counts"], budget=5)
