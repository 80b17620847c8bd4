import random

import pytest

from quadparts.engine import (
    EngineBug,
    Parallel,
    ReducibleVertex,
    Series,
    find_reduction,
    init_labeled,
    partition_2connected,
    partition_with_trace,
)
from quadparts.engine.driver import apply_reduction
from quadparts.families import enumerate_2connected, random_2connected, random_corpus
from quadparts.graphs import SimpleGraph, complete_graph, cycle_graph, norm_edge, path_graph
from quadparts.oracle import verify_partition


class TestInit:
    def test_rejects_wrong_order(self):
        with pytest.raises(ValueError, match="divisible by 4"):
            init_labeled(cycle_graph(6))

    def test_rejects_non_2connected(self):
        with pytest.raises(ValueError, match="2-connected"):
            init_labeled(path_graph(4))

    def test_all_edges_start_empty_weight(self):
        lg = init_labeled(cycle_graph(4))
        assert all(le.label.name == "L0" for le in lg.edges.values())
        assert lg.invariant_ok()


class TestFindReduction:
    def test_c4_starts_with_a_contraction(self):
        lg = init_labeled(cycle_graph(4))
        assert find_reduction(lg) == Series(0)

    def test_k4_starts_at_a_removable_vertex(self):
        lg = init_labeled(complete_graph(4))
        assert find_reduction(lg) == ReducibleVertex(0)

    def test_parallel_has_priority(self):
        # two contractions of a 4-cycle leave a doubled edge
        lg = init_labeled(cycle_graph(4))
        apply_reduction(lg, Series(0))
        apply_reduction(lg, find_reduction(lg))
        assert isinstance(find_reduction(lg), Parallel)


class TestReplacementLabels:
    def test_parallel_merge_rows(self):
        from quadparts.engine.parallel import merged_parallel_label
        from quadparts.labels import CATALOG

        rows = [("L30", "L30", "L21"), ("L1", "L1", "L2"), ("L1", "L30", "L00"),
                ("L2", "L20", "L00"), ("L1", "L2", "L30"), ("L21", "L32", "L10")]
        for a, b, out in rows:
            assert merged_parallel_label(CATALOG[a], CATALOG[b]).name == out

    def test_series_contraction_rows(self):
        from quadparts.engine.series import merged_series_label
        from quadparts.labels import CATALOG

        rows = [("L0", "L0", "L1"), ("L0", "L1", "L2"), ("L0", "L21", "L31"),
                ("L00", "L21", "L31"), ("L21", "L31", "L21"), ("L32", "L32", "L32"),
                ("L31", "L31", "L31"), ("L0", "L2", "L30"), ("L1", "L10", "L30"),
                ("L2", "L30", "L20")]
        for a, b, out in rows:
            assert merged_series_label(CATALOG[a], CATALOG[b]).name == out


class TestSmallGraphs:
    def test_c4_exact(self):
        assert partition_2connected(cycle_graph(4)).as_lists() == [[0, 1, 2, 3]]

    def test_k4_exact(self):
        assert partition_2connected(complete_graph(4)).as_lists() == [[0, 1, 2, 3]]

    def test_all_order4_classes(self):
        for g in enumerate_2connected(4):
            p = partition_2connected(g)
            assert verify_partition(g, p.member_sets()).ok

    def test_cube(self):
        q3 = SimpleGraph.from_edges(8, [(0, 1), (0, 2), (1, 3), (2, 3), (4, 5), (4, 6),
                                        (5, 7), (6, 7), (0, 4), (1, 5), (2, 6), (3, 7)])
        p = partition_2connected(q3)
        assert len(p.parts) == 2
        assert verify_partition(q3, p.member_sets()).ok

    def test_every_part_carries_a_witness(self):
        for p in partition_2connected(cycle_graph(8)).parts:
            assert p.witness is not None
            assert p.members <= p.witness
            assert len(p.witness) <= 5


class TestCorpus:
    def test_random_corpus_partitions_and_verifies(self):
        for n, count, base in ((8, 120, 0), (12, 80, 5000), (16, 30, 6000)):
            for g in random_corpus(n, count, base_seed=base):
                partition = partition_2connected(g)
                assert verify_partition(g, partition.member_sets()).ok

    def test_sparse_subdivided_corpus(self):
        rng = random.Random(20_24)
        for trial in range(150):
            core = random_2connected(rng.choice([4, 5, 6]), trial)
            target = rng.choice([12, 16, 20])
            n, edges = core.n, set(core.edges)
            while n < target:
                e = rng.choice(sorted(edges))
                edges.remove(e)
                edges.add(norm_edge(e[0], n))
                edges.add(norm_edge(n, e[1]))
                n += 1
            g = SimpleGraph(n, frozenset(edges))
            partition = partition_2connected(g)
            assert verify_partition(g, partition.member_sets()).ok

    def test_determinism(self):
        for g in random_corpus(12, 15, base_seed=7000):
            first = partition_2connected(g).as_lists()
            second = partition_2connected(g).as_lists()
            assert first == second

    def test_trace_invariants_and_progress(self):
        for g in random_corpus(12, 25, base_seed=8000):
            _, trace = partition_with_trace(g)
            assert all(t.mod4_ok and t.block_ok for t in trace)
            edge_counts = [t.edges_after for t in trace]
            assert all(a > b for a, b in zip(edge_counts, edge_counts[1:]))
