import random

import pytest

from conftest import seeded_graphs
from parityfactors.criteria import eta_niessen, has_all_parity_factors_exhaustive, niessen_check
from parityfactors.factor import DegreeSpec, find_f_factor
from parityfactors.graph import (
    Graph,
    clique_minus_construction,
    complete_graph,
    cycle_graph,
    random_graph,
)
from parityfactors.theorem import (
    check_nishimura_hypotheses,
    check_theorem14_hypotheses,
    extremal_remark,
    frontier_search,
    sample_h_and_verify,
)

GRID = [(1, 3), (2, 4), (1, 5), (3, 5)]


def test_hypotheses_complete_48():
    rep = check_theorem14_hypotheses(complete_graph(48), 1, 3)
    assert rep.all_hold
    assert "no nonadjacent pairs" in rep.conditions[-1].detail


def test_hypotheses_boundary_instance():
    g, _, _ = clique_minus_construction(48, 12)
    rep = check_theorem14_hypotheses(g, 1, 3)
    assert rep.all_hold and len(rep.conditions) == 7
    assert "36*4=144 >= 144" in rep.conditions[-1].detail


def test_hypotheses_one_below_boundary():
    # T-vertices of degree 35: 35*4 = 140 < 144
    g, _, _ = clique_minus_construction(48, 13)
    rep = check_theorem14_hypotheses(g, 1, 3)
    assert rep.failed == ["nonadjacent_max_degree"]


def test_hypotheses_k4_fails_n_bound():
    rep = check_theorem14_hypotheses(complete_graph(4), 1, 3)
    assert "n_bound" in rep.failed and not rep.all_hold


def test_hypotheses_each_condition():
    assert "a_equiv_b_mod_2" in check_theorem14_hypotheses(complete_graph(4), 1, 2).failed
    assert "a_less_than_b" in check_theorem14_hypotheses(complete_graph(4), 3, 3).failed
    assert "na_even" in check_theorem14_hypotheses(complete_graph(5), 1, 3).failed
    two_cliques = complete_graph(3)
    disconnected = Graph.from_edges(6, list(two_cliques.edges) + [(3, 4), (3, 5), (4, 5)])
    assert "connected" in check_theorem14_hypotheses(disconnected, 1, 3).failed
    # delta * a >= b^2 - b exactly at the boundary: delta = 6, a = 1, b = 3
    g = complete_graph(7)
    assert "min_degree" not in check_theorem14_hypotheses(g, 1, 3).failed
    assert "min_degree" in check_theorem14_hypotheses(complete_graph(6), 1, 3).failed


def test_hypotheses_need_positive_a():
    with pytest.raises(ValueError):
        check_theorem14_hypotheses(complete_graph(4), 0, 2)


def test_hypotheses_invariant_under_relabelling():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(10, 60)
        g = random_graph(n, rng.choice(["1/2", "4/5", "19/20"]), rng.getrandbits(32))
        perm = list(range(n))
        rng.shuffle(perm)
        for a, b in GRID:
            assert (
                check_theorem14_hypotheses(g, a, b).verdicts()
                == check_theorem14_hypotheses(g.relabel(perm), a, b).verdicts()
            )


def test_nishimura_examples():
    assert check_nishimura_hypotheses(complete_graph(10), 3).all_hold
    assert "min_degree" in check_nishimura_hypotheses(cycle_graph(8), 3).failed
    assert check_nishimura_hypotheses(complete_graph(9), 3).failed == ["kn_even"]
    assert "k_at_least_3" in check_nishimura_hypotheses(complete_graph(10), 2).failed


def test_remark_examples():
    inst = extremal_remark(10, 1, 3)
    assert (inst.s, inst.t, inst.eta) == (7, 3, -2)
    inst = extremal_remark(48, 1, 3)
    assert (inst.s, inst.t, inst.eta) == (35, 13, -4)
    # one short of the degree threshold: 35*4 = 140 < 144
    assert check_theorem14_hypotheses(inst.graph, 1, 3).failed == ["nonadjacent_max_degree"]


def test_remark_grid():
    for a, b in GRID:
        for n in range(a + b, 61):
            inst = extremal_remark(n, a, b)
            assert inst.eta < 0
            assert inst.eta == a * inst.s - b * inst.t
            spec = DegreeSpec.constant(n, a, b)
            assert eta_niessen(inst.graph, inst.S, inst.T, spec) == inst.eta
            # T-vertices sit strictly below bn/(a+b)
            assert inst.s * (a + b) < b * n


def test_remark_small_is_confirmed_exhaustively():
    inst = extremal_remark(10, 1, 3)
    assert not niessen_check(inst.graph, DegreeSpec.constant(10, 1, 3)).satisfied


def test_remark_preconditions():
    with pytest.raises(ValueError):
        extremal_remark(10, 1, 2)
    with pytest.raises(ValueError):
        extremal_remark(0, 1, 3)


def test_sample_complete_48():
    rep = sample_h_and_verify(complete_graph(48), 1, 3, trials=30, seed=1)
    assert rep.ok and rep.params["checked"] == 32


def test_sample_k4_finds_failure():
    rep = sample_h_and_verify(complete_graph(4), 1, 3, trials=50, seed=2)
    assert rep.failures
    for fail in rep.failures:
        assert find_f_factor(complete_graph(4), fail["h"]) is None


def test_sample_degenerate_spec():
    g = cycle_graph(6)
    rep = sample_h_and_verify(g, 2, 2, trials=5, seed=0, stratified=False)
    assert rep.ok and rep.params["checked"] == 5
    # a = b: every trial is the same 3-factor query, which fails on C_6
    rep = sample_h_and_verify(g, 3, 3, trials=4, seed=0, stratified=False)
    assert [f["h"] for f in rep.failures] == [[3] * 6] * 4


def test_sample_requires_even_bn():
    with pytest.raises(ValueError):
        sample_h_and_verify(complete_graph(5), 1, 3, trials=1, seed=0)


def test_sample_deterministic():
    g = random_graph(12, "3/4", 4)
    one = sample_h_and_verify(g, 2, 4, trials=15, seed=9).to_json()
    two = sample_h_and_verify(g, 2, 4, trials=15, seed=9).to_json()
    assert one == two


def test_sample_never_contradicts_exhaustive():
    for seed, g in seeded_graphs(40, (4, 8), ["4/5", "1"], seed0=77):
        for a, b in ((1, 3), (2, 4)):
            if b * g.n % 2:
                continue
            all_ok, _ = has_all_parity_factors_exhaustive(g, a, b)
            sampled = sample_h_and_verify(g, a, b, trials=10, seed=seed)
            if all_ok:
                assert sampled.ok


def test_frontier_remark_family_fails_everywhere():
    rep = frontier_search(1, 3, range(4, 11), family="remark", seed=5)
    assert len(rep.rows) == 7
    assert all(not row["conclusion"] for row in rep.rows)
    assert all(row["label"] == "exploration" for row in rep.rows)
    assert len(rep.failures) == 7


def test_frontier_shift_rows_checkable():
    rep = frontier_search(1, 3, range(4, 11), family="remark-shift", seed=5, shift=1)
    for row in rep.rows:
        inst = row["instance"]
        g, _, _ = clique_minus_construction(inst["n"], inst["t"])
        if row["method"] in ("exhaustive_h", "niessen_scan"):
            assert row["conclusion"] == niessen_check(g, DegreeSpec.constant(g.n, 1, 3)).satisfied


def test_frontier_random_family_and_determinism():
    one = frontier_search(1, 3, range(6, 9), family="random", trials=2, seed=11).to_json()
    two = frontier_search(1, 3, range(6, 9), family="random", trials=2, seed=11).to_json()
    assert one == two
    for row in one["rows"]:
        assert row["degree_conditions_hold"]


def test_frontier_sampling_above_scan_limit():
    rep = frontier_search(1, 3, range(16, 17), family="remark-shift", trials=3, seed=1, shift=1)
    (row,) = rep.rows
    assert row["method"] == "sampled" and "sample_seed" in row
