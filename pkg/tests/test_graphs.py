import random
from itertools import combinations

import pytest

from quadparts.graphs import (
    Multigraph,
    SimpleGraph,
    complete_graph,
    connected_components,
    cycle_graph,
    diameter,
    graph_power,
    is_biconnected,
    path_graph,
    smallest_2cut_component,
)


def brute_biconnected(g: SimpleGraph) -> bool:
    """Independent oracle: connected, and still connected after deleting any
    one vertex."""
    if g.n < 2:
        return False
    if len(connected_components(g)) != 1:
        return False
    return all(len(connected_components(g, removed={v})) <= 1 for v in range(g.n))


def random_graph(n: int, p: float, seed: int) -> SimpleGraph:
    rng = random.Random(seed)
    return SimpleGraph.from_edges(
        n, [e for e in combinations(range(n), 2) if rng.random() < p]
    )


class TestBiconnected:
    def test_cycle(self):
        assert is_biconnected(cycle_graph(4))

    def test_path_has_cutvertex(self):
        assert not is_biconnected(path_graph(3))

    def test_k4_minus_edge(self):
        g = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert brute_biconnected(g)
        assert is_biconnected(g)

    def test_single_edge_counts(self):
        assert is_biconnected(SimpleGraph.from_edges(2, [(0, 1)]))
        assert not is_biconnected(SimpleGraph(2, frozenset()))
        assert not is_biconnected(SimpleGraph(1, frozenset()))

    def test_two_vertex_multigraph(self):
        mg = Multigraph([0, 1])
        assert not is_biconnected(mg)
        mg.add_edge(0, 1)
        assert is_biconnected(mg)

    def test_parallel_edges_do_not_hide_cutvertices(self):
        # doubling an edge never removes a vertex cut
        mg = Multigraph(range(4), [(0, 1), (1, 2), (0, 2), (2, 3), (2, 3)])
        assert not is_biconnected(mg)
        mg2 = Multigraph(range(3), [(0, 1), (0, 1), (1, 2), (1, 2)])
        assert not is_biconnected(mg2)

    def test_agrees_with_brute_force_exhaustively_tiny(self):
        for n in (2, 3, 4, 5):
            pairs = list(combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                g = SimpleGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
                assert is_biconnected(g) == brute_biconnected(g), (n, mask)

    def test_agrees_with_brute_force_random(self):
        for n in (6, 7):
            for seed in range(120):
                g = random_graph(n, 0.5, 1000 * n + seed)
                assert is_biconnected(g) == brute_biconnected(g), (n, seed)


class TestSmallest2Cut:
    def test_c4(self):
        pair, comp = smallest_2cut_component(cycle_graph(4))
        assert pair == (0, 2)
        assert comp == frozenset({1})

    def test_k4_is_3connected(self):
        assert smallest_2cut_component(complete_graph(4)) is None

    def test_theta_of_short_paths(self):
        # three internally disjoint length-2 paths between 0 and 1
        g = SimpleGraph.from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
        pair, comp = smallest_2cut_component(g)
        assert pair == (0, 1)
        assert len(comp) == 1

    def test_rejects_non_2connected(self):
        with pytest.raises(ValueError):
            smallest_2cut_component(path_graph(4))

    def test_minimality_exhaustive(self):
        for n in (5, 6, 7, 8):
            for seed in range(25):
                g = random_graph(n, 0.45, 77 * n + seed)
                if not is_biconnected(g):
                    continue
                got = smallest_2cut_component(g)
                best = None
                for u, v in combinations(range(n), 2):
                    comps = connected_components(g, removed={u, v})
                    if len(comps) >= 2:
                        small = min(len(c) for c in comps)
                        best = small if best is None else min(best, small)
                if best is None:
                    assert got is None
                else:
                    assert got is not None and len(got[1]) == best


class TestGraphPower:
    def test_identity_at_one(self):
        g = random_graph(7, 0.4, 3)
        assert graph_power(g, 1).edges == g.edges

    def test_c5_squared_is_complete(self):
        assert graph_power(cycle_graph(5), 2).edges == complete_graph(5).edges

    def test_p4_squared(self):
        got = graph_power(path_graph(4), 2)
        assert got.edges == frozenset({(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)})

    def test_monotone_in_k(self):
        g = random_graph(8, 0.3, 9)
        if len(connected_components(g)) != 1:
            g = cycle_graph(8)
        prev = graph_power(g, 1).edges
        for k in range(2, 6):
            cur = graph_power(g, k).edges
            assert prev <= cur
            prev = cur

    def test_complete_at_diameter(self):
        for seed in range(10):
            g = random_graph(7, 0.4, 500 + seed)
            if len(connected_components(g)) != 1:
                continue
            d = diameter(g)
            assert graph_power(g, d).edges == complete_graph(7).edges

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            graph_power(cycle_graph(4), 0)


class TestMultigraph:
    def test_stable_edge_ids(self):
        mg = Multigraph(range(3), [(0, 1), (1, 2)])
        e = mg.add_edge(0, 2)
        mg.remove_edge(0)
        assert mg.endpoints(e) == (0, 2)
        e2 = mg.add_edge(0, 1)
        assert e2 > e

    def test_remove_vertex_requires_isolation(self):
        mg = Multigraph(range(2), [(0, 1)])
        with pytest.raises(ValueError):
            mg.remove_vertex(0)

    def test_no_loops(self):
        mg = Multigraph(range(2))
        with pytest.raises(ValueError):
            mg.add_edge(1, 1)
