import random

import pytest

from burnkit import (
    Tree,
    build_graph,
    burning_number_exact,
    burning_number_via_spanning_trees,
    enumerate_spanning_trees,
    find_hist,
    hist_bound,
    is_complete,
    is_hit,
    matrix_tree_count,
    simulate,
    sqrt_ceil,
)
from burnkit.errors import Disconnected, TooLarge, TooMany
from burnkit.generators import path_graph, petersen_graph, star_graph

from helpers import random_connected_graph


def cycle_graph(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_tree_enumerates_itself():
    trees = list(enumerate_spanning_trees(path_graph(5)))
    assert len(trees) == 1 and trees[0].graph == path_graph(5)


def test_c4_has_four_spanning_trees():
    trees = list(enumerate_spanning_trees(cycle_graph(4)))
    assert len(trees) == 4
    assert len({tuple(t.graph.edges()) for t in trees}) == 4


def test_petersen_spanning_tree_count():
    assert matrix_tree_count(petersen_graph()) == 2000
    assert sum(1 for _ in enumerate_spanning_trees(petersen_graph())) == 2000


def test_enumeration_count_matches_determinant():
    rng = random.Random(61)
    for _ in range(25):
        g = random_connected_graph(rng.randint(2, 8), rng)
        assert sum(1 for _ in enumerate_spanning_trees(g)) == matrix_tree_count(g)


def test_enumeration_guards():
    with pytest.raises(TooMany):
        list(enumerate_spanning_trees(petersen_graph(), limit=1999))
    with pytest.raises(Disconnected):
        list(enumerate_spanning_trees(build_graph(3, [(0, 1)])))


def test_spanning_min_examples():
    assert burning_number_via_spanning_trees(path_graph(4))[0] == 2
    assert burning_number_via_spanning_trees(cycle_graph(4))[0] == 2
    k, tree, sched = burning_number_via_spanning_trees(petersen_graph())
    assert k == 3 == burning_number_exact(petersen_graph())[0]
    assert is_complete(simulate(tree.graph, sched))


def test_subtree_lemma_equality_random():
    rng = random.Random(67)
    for _ in range(30):
        g = random_connected_graph(rng.randint(2, 8), rng)
        assert burning_number_via_spanning_trees(g)[0] == burning_number_exact(g)[0]


def test_spanning_subgraph_monotonicity():
    # a schedule complete on a spanning tree is complete on the host graph
    # in no more rounds
    rng = random.Random(71)
    for _ in range(20):
        g = random_connected_graph(rng.randint(2, 8), rng)
        for tree in enumerate_spanning_trees(g):
            _, sched = burning_number_exact(tree.graph)
            on_tree = simulate(tree.graph, sched)
            on_graph = simulate(g, sched)
            assert is_complete(on_graph)
            for a, b in zip(on_graph.rounds, on_tree.rounds):
                assert a <= b
            break


def test_find_hist_star_is_itself():
    g = star_graph(5)
    result = find_hist(g)
    assert result.found and result.tree.graph == g


def test_find_hist_c4_none():
    result = find_hist(cycle_graph(4))
    assert not result.found and result.tree is None


def test_find_hist_petersen():
    result = find_hist(petersen_graph())
    assert result.found
    tree = result.tree
    assert tree.n == 10 and is_hit(tree)
    assert all(petersen_graph().has_edge(u, v) for u, v in tree.graph.edges())


def test_find_hist_guards():
    with pytest.raises(TooLarge):
        find_hist(petersen_graph(), limit=9)
    with pytest.raises(Disconnected):
        find_hist(build_graph(2, []))


def test_find_hist_agrees_with_enumeration_filter():
    rng = random.Random(73)
    for _ in range(25):
        g = random_connected_graph(rng.randint(2, 9), rng)
        by_filter = any(is_hit(t) for t in enumerate_spanning_trees(g))
        assert find_hist(g).found == by_filter


def test_hist_bound_star():
    plan = hist_bound(star_graph(5))
    assert plan is not None and len(plan.schedule) == 2 <= plan.bound


def test_hist_bound_c4_empty():
    assert hist_bound(cycle_graph(4)) is None


def test_hist_bound_petersen():
    plan = hist_bound(petersen_graph())
    assert plan is not None
    assert plan.bound == sqrt_ceil(10) == 4
    assert len(plan.schedule) <= 4
    assert is_complete(simulate(petersen_graph(), plan.schedule))


def test_hist_bound_sound_on_random_graphs():
    rng = random.Random(79)
    for _ in range(15):
        g = random_connected_graph(rng.randint(2, 9), rng)
        plan = hist_bound(g)
        if plan is None:
            assert not find_hist(g).found
        else:
            assert burning_number_exact(g)[0] <= len(plan.schedule) <= plan.bound
