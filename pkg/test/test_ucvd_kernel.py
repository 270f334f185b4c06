import unittest

from hypothesis import given, settings
import hypothesis.strategies as st

from UCluster._Instance import Instance
from UCluster.Graph import Graph, bits, to_mask, are_true_twins
from UCluster.Kernels import (
    CliquePartitionState, heavy_neighbor_of, boundary_set, kernelize_ucvd,
    ucvd_bound, KernelContext, UCVD_RULES, YES,
)
from UCluster.Oracle import oracle_ucvd
from UCluster.utils.corpus import named_graph, path, complete, disjoint_union
from UCluster.utils.generate import random_corpus

from _strategies import graphs


def resolve(outcome, override=False):
    """Final answer of a kernel outcome, finishing reduced instances with
    the oracle."""
    if outcome.decided:
        return outcome.decision == YES
    reduced = outcome.instance
    return oracle_ucvd(reduced.graph, reduced.k, override=override).decision


def clique_with_attachments(size, attachments):
    """K_size on 0..size-1 plus one vertex per entry of attachments, adjacent
    to the listed clique vertices."""
    g = complete(size)
    edges = list(g.edges())
    n = size
    for members in attachments:
        edges.extend((v, n) for v in members)
        n += 1
    return Graph(n, edges)


class TestHeavyNeighbour(unittest.TestCase):

    def test_threshold(self):
        # k=1, |C|=10: heavy at max(10 - 4, 2) = 6 neighbours
        g = clique_with_attachments(10, [range(7), range(5)])
        state = CliquePartitionState(g, 1, S=to_mask([10, 11]))
        self.assertEqual(len(state.cliques), 1)
        self.assertEqual(heavy_neighbor_of(state, 10), 0)
        self.assertIsNone(heavy_neighbor_of(state, 11))

    def test_no_neighbours(self):
        g = clique_with_attachments(4, [[]])
        state = CliquePartitionState(g, 1, S=to_mask([4]))
        self.assertIsNone(heavy_neighbor_of(state, 4))


class TestBoundarySet(unittest.TestCase):

    def test_two_unions(self):
        # C = 0..9, s = 10 sees C - {0}; s' = 11 is heavy for D = 12..21 and
        # sees vertex 1 of C
        edges = list(complete(10).edges())
        edges.extend((v + 12, u + 12) for v, u in complete(10).edges())
        edges.extend((v, 10) for v in range(1, 10))
        edges.extend((v, 11) for v in range(12, 22))
        edges.append((1, 11))
        g = Graph(22, edges)
        state = CliquePartitionState(g, 1, S=to_mask([10, 11]))
        i = [j for j, C in enumerate(state.cliques) if C & 1][0]
        self.assertEqual(boundary_set(state, i), (0, 1))

    def test_untouched_clique(self):
        g = disjoint_union(complete(3), named_graph("p3"))
        state = CliquePartitionState(g, 1)
        i = [j for j, C in enumerate(state.cliques) if C & 1][0]
        self.assertEqual(boundary_set(state, i), ())

    @given(graphs(min_n=1, max_n=9), st.integers(min_value=1, max_value=3))
    @settings(max_examples=150, deadline=None)
    def test_remainder_are_twins(self, g, k):
        state = CliquePartitionState(g, k)
        for i in range(len(state.cliques)):
            rest = list(bits(state.twins(i)))
            for u in rest:
                for v in rest:
                    self.assertTrue(are_true_twins(g, u, v))


class TestKernelizeUCVD(unittest.TestCase):

    def test_packing_decides(self):
        g = disjoint_union(path(3), path(3))
        outcome = kernelize_ucvd(g, 1)
        self.assertTrue(outcome.decided)
        self.assertNotEqual(outcome.decision, YES)
        self.assertEqual(outcome.trace[-1].rule, "P3PACK")

    def test_c4_case1(self):
        g = named_graph("c4")
        outcome = kernelize_ucvd(g, 1)
        self.assertTrue(outcome.reduced)
        self.assertEqual(outcome.trace[-1].rule, "CASE1")
        self.assertEqual(outcome.instance.graph.n, 4)
        self.assertEqual(outcome.instance.graph.m, 4)
        self.assertEqual(outcome.instance.k, 1)

    def test_uniform(self):
        outcome = kernelize_ucvd(disjoint_union(complete(3), complete(3)), 0)
        self.assertEqual(outcome.decision, YES)
        self.assertEqual(outcome.forced_deletions, ())

    def test_budget(self):
        outcome = kernelize_ucvd(named_graph("p3"), 0)
        self.assertEqual(outcome.trace[-1].rule, "BUDGET")
        self.assertFalse(resolve(outcome))

    def test_planted_attachment(self):
        # three K8s and one vertex seeing five vertices of each
        edges = []
        for i in range(3):
            edges.extend((u + 8 * i, v + 8 * i) for u, v in complete(8).edges())
            edges.extend((8 * i + j, 24) for j in range(5))
        g = Graph(25, edges)
        self.assertTrue(resolve(kernelize_ucvd(g, 3), override=True))

    def test_stats(self):
        stats = kernelize_ucvd(named_graph("c4"), 1).stats()
        self.assertEqual(stats["version"], 1)
        self.assertEqual(stats["variant"], "ucvd")
        self.assertEqual(stats["n_after"], 4)
        self.assertEqual(stats["k_after"], 1)

    def test_matches_oracle(self):
        for i, g in enumerate(random_corpus(500, 10, seed=11, min_n=3)):
            k = i % 4
            outcome = kernelize_ucvd(g, k)
            self.assertEqual(resolve(outcome), oracle_ucvd(g, k).decision,
                             msg="graph {} k={}".format(i, k))
            if outcome.reduced:
                self.assertLessEqual(outcome.instance.graph.n, ucvd_bound(k))
                self.assertLessEqual(outcome.instance.k, k)

    def test_forced_deletions_lift(self):
        for i, g in enumerate(random_corpus(40, 10, seed=23, min_n=3)):
            k = 1 + i % 3
            outcome = kernelize_ucvd(g, k)
            if outcome.reduced:
                self.assertEqual(len(outcome.forced_deletions),
                                 k - outcome.instance.k)

    def test_single_rule_preserves_answer(self):
        for i, g in enumerate(random_corpus(50, 9, seed=31, min_n=3)):
            k = 1 + i % 3
            ctx = KernelContext(Instance(g, k, "ucvd"))
            for rule in UCVD_RULES:
                firing = rule(ctx)
                if firing is not None:
                    break
            if firing.decision is not None:
                continue
            before = oracle_ucvd(g, k).decision
            ctx.apply(firing)
            after = ctx.k >= 0 and oracle_ucvd(ctx.graph, ctx.k).decision
            self.assertEqual(before, after,
                             msg="graph {} rule {}".format(i, firing.rule))


if __name__ == '__main__':
    unittest.main()
