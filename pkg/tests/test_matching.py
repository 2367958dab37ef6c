import random

import networkx as nx
import pytest

from conftest import seeded_graphs
from parityfactors.errors import SizeGuardError
from parityfactors.graph import (
    Graph,
    all_graphs,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    random_graph,
)
from parityfactors.matching import (
    brute_force_maximum_matching,
    has_perfect_matching,
    maximum_matching,
)


def has_augmenting_path(g: Graph, mate: list[int]) -> bool:
    """Search every simple alternating path from each exposed vertex."""

    def extend(v, visited, need_matched):
        for w in g.adj[v]:
            if w in visited or (mate[v] == w) != need_matched:
                continue
            if not need_matched and mate[w] == -1:
                return True
            if extend(w, visited | {w}, not need_matched):
                return True
        return False

    return any(mate[r] == -1 and extend(r, {r}, False) for r in range(g.n))


def test_examples():
    assert maximum_matching(cycle_graph(5)).size == 2
    assert maximum_matching(complete_graph(4)).size == 2
    pet = petersen_graph()
    assert maximum_matching(pet).size == 5 == brute_force_maximum_matching(pet).size


def test_has_perfect_matching():
    assert has_perfect_matching(complete_graph(2))
    assert not has_perfect_matching(path_graph(3))
    k4_minus = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert has_perfect_matching(k4_minus)
    assert brute_force_maximum_matching(k4_minus).is_perfect()


def test_brute_force_examples():
    assert brute_force_maximum_matching(cycle_graph(5)).size == 2
    assert brute_force_maximum_matching(empty_graph(4)).size == 0
    g = random_graph(7, "1/2", 3)
    assert brute_force_maximum_matching(g).size == maximum_matching(g).size


def test_brute_force_guard():
    with pytest.raises(SizeGuardError):
        brute_force_maximum_matching(complete_graph(8))


def test_exhaustive_small_graphs():
    for n in range(6):
        for g in all_graphs(n):
            m = maximum_matching(g)
            assert m.is_valid_for(g)
            assert m.size == brute_force_maximum_matching(g).size


def test_random_against_brute_force():
    checked = 0
    for _, g in seeded_graphs(700, (1, 8), ["3/10", "1/2", "4/5"]):
        if g.m > 24:
            continue
        m = maximum_matching(g)
        assert m.is_valid_for(g)
        assert m.size == brute_force_maximum_matching(g).size
        checked += 1
    assert checked >= 500


def test_no_augmenting_path_left():
    for _, g in seeded_graphs(150, (2, 10), ["1/5", "2/5", "3/5"]):
        m = maximum_matching(g)
        assert not has_augmenting_path(g, m.mate())


def test_berge_search_detects_non_maximum():
    g = path_graph(4)
    assert has_augmenting_path(g, [-1, 2, 1, -1])


@pytest.mark.parametrize("seed", range(8))
def test_larger_graphs_against_networkx(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(40, 120), rng.choice(["1/20", "1/10", "1/4"]), seed)
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges)
    expected = len(nx.max_weight_matching(ref, maxcardinality=True))
    for initial in (None, []):
        m = maximum_matching(g, initial)
        assert m.is_valid_for(g) and m.size == expected


def test_warm_start_is_validated():
    g = path_graph(3)
    with pytest.raises(ValueError):
        maximum_matching(g, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        maximum_matching(g, [(0, 2)])
    assert maximum_matching(g, [(1, 2)]).size == 1


def test_deterministic():
    g = random_graph(30, "1/5", 11)
    assert maximum_matching(g) == maximum_matching(g)
