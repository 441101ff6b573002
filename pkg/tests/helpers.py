"""Shared test utilities: exhaustive HIT enumeration, small-graph catalogs,
naive brute-force burning oracles, and random instance builders.

The naive oracles here are deliberately independent of the library's search:
they enumerate source sequences outright and decide completeness purely by
simulation.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

import networkx as nx

from burnkit import (
    BurningSchedule,
    Graph,
    ModifiedSchedule,
    Tree,
    build_graph,
    build_tree,
    is_complete,
    simulate,
    simulate_modified,
)


def enumerate_hits(max_n: int) -> Iterator[Tree]:
    """Every HIT on at most max_n vertices, covering all isomorphism classes
    (isomorphic duplicates possible, harmless for property checks).

    A HIT with internal vertices is its internal skeleton tree plus >= 1
    pendant leaves per skeleton vertex, enough to push every skeleton degree
    to 3. HITs need #leaves >= #internal + 2, so skeletons have at most
    (max_n - 2) // 2 vertices.
    """
    yield build_tree(1, [])
    if max_n >= 2:
        yield build_tree(2, [(0, 1)])
    for i in range(1, (max_n - 2) // 2 + 1):
        if i == 1:
            skeletons = [[]]
        else:
            skeletons = [list(t.edges()) for t in nx.nonisomorphic_trees(i)]
        for edges in skeletons:
            deg = [0] * i
            for u, v in edges:
                deg[u] += 1
                deg[v] += 1
            mins = [max(0, 3 - d) for d in deg]
            budget = max_n - i - sum(mins)
            if budget < 0:
                continue
            for extra in _compositions_upto(i, budget):
                counts = [m + e for m, e in zip(mins, extra)]
                hit_edges = list(edges)
                nxt = i
                for v, c in enumerate(counts):
                    for _ in range(c):
                        hit_edges.append((v, nxt))
                        nxt += 1
                yield build_tree(nxt, hit_edges)


def _compositions_upto(slots: int, budget: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `slots` nonnegative ints with sum <= budget."""
    if slots == 0:
        yield ()
        return
    for head in range(budget + 1):
        for tail in _compositions_upto(slots - 1, budget - head):
            yield (head,) + tail


def atlas_connected_graphs(max_n: int) -> list[Graph]:
    """All connected graphs on 1..max_n vertices (max_n <= 7), from the
    graph atlas; one representative per isomorphism class."""
    out = []
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= max_n and nx.is_connected(g):
            relabel = {v: idx for idx, v in enumerate(sorted(g.nodes()))}
            edges = [(relabel[u], relabel[v]) for u, v in g.edges()]
            out.append(build_graph(g.number_of_nodes(), edges))
    return out


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """Random tree plus a few random extra edges."""
    tree = random_tree_rng(n, rng)
    edges = set(tree.graph.edges())
    extras = rng.randrange(0, max(1, n))
    for _ in range(extras):
        u, v = rng.sample(range(n), 2) if n >= 2 else (0, 0)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))


def random_tree_rng(n: int, rng: random.Random) -> Tree:
    from burnkit.generators import prufer_decode

    word = [rng.randrange(n) for _ in range(max(0, n - 2))]
    return prufer_decode(word, n)


def random_hit_rng(n: int, rng: random.Random) -> Tree:
    from burnkit.generators import random_hit

    return random_hit(n, seed=rng.randrange(2**32))


def subdivide_edge(t: Tree, edge: tuple[int, int]) -> tuple[Tree, int]:
    """Split one edge with a fresh vertex; returns the new tree and the new
    (degree-2) vertex id."""
    a, b = edge
    v = t.n
    edges = [e for e in t.graph.edges() if e != (min(a, b), max(a, b))]
    edges.extend([(a, v), (b, v)])
    return build_tree(t.n + 1, edges), v


def naive_burning_number(g: Graph, max_k: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Brute-force minimum schedule length by full sequence enumeration."""
    limit = max_k if max_k is not None else g.n
    for k in range(1, limit + 1):
        for seq in itertools.product(range(g.n), repeat=k):
            if is_complete(simulate(g, BurningSchedule(sources=seq))):
                return k, seq
    raise AssertionError(f"no burning sequence of length <= {limit}")


def naive_modified_burning_number(
    g: Graph, preburn: tuple[int, ...]
) -> tuple[int, tuple[int, ...]]:
    for k in range(1, g.n + 1):
        for seq in itertools.product(range(g.n), repeat=k):
            bm = simulate_modified(
                g, ModifiedSchedule(preburn=preburn, sources=seq)
            )
            if is_complete(bm):
                return k, seq
    raise AssertionError("no modified burning sequence found")


EIGHT_VERTEX_HIT_EDGES = [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6), (5, 7)]


def eight_vertex_hit() -> Tree:
    """An 8-vertex HIT used as a shared worked example across the tests."""
    return build_tree(8, EIGHT_VERTEX_HIT_EDGES)
