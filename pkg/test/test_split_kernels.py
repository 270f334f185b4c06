import unittest

from UCluster.Graph import Graph, is_uniform_cluster
from UCluster._Instance import Witness, Instance, apply_witness, verify_witness
from UCluster._Exceptions import InputException
from UCluster.Kernels import (
    CliqueFamily, PARTITION, COVER, partition_to_splits, cover_to_splits,
    splits_to_family, split_profile, combined_rule, greedy_kd_edge_partition,
    greedy_sigma_cover, run_greedy, kernelize_ucevs, kernelize_ucivs,
    split_bound, YES, NO,
)
from UCluster.Oracle import oracle_ucevs, oracle_ucivs
from UCluster.utils.corpus import named_graph, complete, disjoint_union
from UCluster.utils.commands import lift_witness
from UCluster.utils.generate import random_corpus

from _strategies import atlas

ORACLES = {"ucevs": oracle_ucevs, "ucivs": oracle_ucivs}


def resolve(outcome):
    if outcome.decided:
        return outcome.decision == YES
    reduced = outcome.instance
    return ORACLES[outcome.variant](
        reduced.graph, reduced.k, override=True
    ).decision


class TestCliqueFamily(unittest.TestCase):

    def test_cost_and_weight(self):
        fam = CliqueFamily([(0, 1, 2), (2, 3, 4)], PARTITION)
        self.assertEqual(fam.cost(), 1)
        self.assertEqual(fam.weight(), 6)
        self.assertEqual(fam.clique_size, 3)

    def test_validate_overlap(self):
        fam = CliqueFamily([(0, 1, 2), (1, 2, 3)], PARTITION)
        with self.assertRaises(InputException):
            fam.validate(named_graph("diamond"))

    def test_validate_uncovered(self):
        fam = CliqueFamily([(0, 1, 2)], COVER)
        with self.assertRaises(InputException):
            fam.validate(named_graph("diamond"))

    def test_bad_kind(self):
        with self.assertRaises(InputException):
            CliqueFamily([(0, 1)], "packing")


class TestExtraction(unittest.TestCase):

    def test_bowtie_partition(self):
        g = named_graph("bowtie")
        steps = partition_to_splits(
            g, CliqueFamily([(0, 1, 2), (2, 3, 4)], PARTITION)
        )
        self.assertEqual(len(steps), 1)
        self.assertEqual(steps[0].vertex, 2)
        result = apply_witness(g, Witness("ucevs", steps))
        self.assertEqual(is_uniform_cluster(result), 3)

    def test_disjoint_partition(self):
        g = disjoint_union(complete(3), complete(3))
        fam = CliqueFamily([(0, 1, 2), (3, 4, 5)], PARTITION)
        self.assertEqual(partition_to_splits(g, fam), [])

    def test_diamond_cover(self):
        g = named_graph("diamond")
        steps = cover_to_splits(g, CliqueFamily([(0, 1, 2), (1, 2, 3)], COVER))
        self.assertEqual(len(steps), 2)
        result = apply_witness(g, Witness("ucivs", steps))
        self.assertEqual(is_uniform_cluster(result), 3)
        self.assertEqual(result.n, 6)

    def test_disjoint_cover(self):
        g = complete(3)
        self.assertEqual(cover_to_splits(g, CliqueFamily([(0, 1, 2)], COVER)), [])

    def test_invalid_family(self):
        with self.assertRaises(InputException):
            partition_to_splits(named_graph("bowtie"),
                                CliqueFamily([(0, 1, 2)], PARTITION))

    def test_trace_back(self):
        g = named_graph("diamond")
        fam = CliqueFamily([(0, 1, 2), (1, 2, 3)], COVER)
        self.assertEqual(splits_to_family(g, cover_to_splits(g, fam)), fam)
        g = named_graph("bowtie")
        fam = CliqueFamily([(0, 1, 2), (2, 3, 4)], PARTITION)
        self.assertEqual(splits_to_family(g, partition_to_splits(g, fam)), fam)


class TestGreedy(unittest.TestCase):

    def test_bowtie_partition(self):
        fam = greedy_kd_edge_partition(named_graph("bowtie"), 1, 2)
        self.assertEqual(fam, CliqueFamily([(0, 1, 2), (2, 3, 4)], PARTITION))
        self.assertEqual(fam.cost(), 1)

    def test_two_triangles(self):
        fam = greedy_kd_edge_partition(
            disjoint_union(complete(3), complete(3)), 0, 2
        )
        self.assertEqual(len(fam.parts), 2)
        self.assertEqual(fam.cost(), 0)

    def test_diamond_partition(self):
        self.assertIsNone(greedy_kd_edge_partition(named_graph("diamond"), 3, 2))

    def test_bowtie_cover(self):
        fam = greedy_sigma_cover(named_graph("bowtie"), 1, 2)
        self.assertEqual(fam.kind, COVER)
        self.assertEqual(fam.cost(), 1)

    def test_diamond_cover(self):
        fam = greedy_sigma_cover(named_graph("diamond"), 2, 2)
        self.assertEqual(fam, CliqueFamily([(0, 1, 2), (1, 2, 3)], COVER))
        self.assertIsNone(greedy_sigma_cover(named_graph("diamond"), 1, 2))

    def test_triangle(self):
        fam = greedy_sigma_cover(complete(3), 0, 2)
        self.assertEqual(fam.parts, ((0, 1, 2),))


class TestProfile(unittest.TestCase):

    def test_split_profile(self):
        self.assertEqual(split_profile(named_graph("bowtie"), 1), 2)
        self.assertIsNone(split_profile(named_graph("diamond"), 1))

    def test_combined_rule(self):
        self.assertIsNone(combined_rule(named_graph("bowtie"), 1, 2))
        self.assertIsNotNone(combined_rule(named_graph("bowtie"), 0, 2))
        self.assertIsNotNone(combined_rule(named_graph("p4"), 2, 2))

    def test_bound(self):
        self.assertEqual(split_bound(3), 12)


class TestKernelizeSplits(unittest.TestCase):

    def test_bowtie_exclusive(self):
        outcome = kernelize_ucevs(named_graph("bowtie"), 1)
        self.assertEqual(outcome.decision, YES)
        self.assertEqual(sorted(outcome.family), [(0, 1, 2), (2, 3, 4)])

    def test_diamond_exclusive(self):
        self.assertFalse(resolve(kernelize_ucevs(named_graph("diamond"), 3)))

    def test_isolated_vertex(self):
        g = disjoint_union(complete(1), complete(2))
        for k in range(3):
            outcome = kernelize_ucevs(g, k)
            self.assertTrue(outcome.decided)
            self.assertNotEqual(outcome.decision, YES)

    def test_diamond_inclusive(self):
        self.assertTrue(resolve(kernelize_ucivs(named_graph("diamond"), 2)))
        outcome = kernelize_ucivs(named_graph("diamond"), 1)
        self.assertTrue(outcome.decided)
        self.assertNotEqual(outcome.decision, YES)

    def test_two_triangles_inclusive(self):
        outcome = kernelize_ucivs(disjoint_union(complete(3), complete(3)), 0)
        self.assertEqual(outcome.decision, YES)

    def test_family_lifts(self):
        # a yes decision carries a family that extracts into a witness
        g = named_graph("bowtie")
        outcome = kernelize_ucivs(g, 1)
        fam = CliqueFamily(outcome.family, COVER)
        steps = cover_to_splits(g, fam)
        verify_witness(Instance(g, 1, "ucivs"), Witness("ucivs", steps))

    def check_corpus(self, variant, graphs, seen):
        kernel = {"ucevs": kernelize_ucevs, "ucivs": kernelize_ucivs}[variant]
        checked = 0
        for i, g in enumerate(graphs):
            # the exclusive oracle enumerates edge partitions
            if variant == "ucevs" and g.m > 16:
                continue
            k = i % 3
            outcome = kernel(g, k)
            rule = outcome.trace[-1].rule
            seen.setdefault(variant, set()).add(rule)
            if outcome.reduced:
                self.assertLessEqual(outcome.instance.graph.n, split_bound(k))
            self.assertEqual(
                resolve(outcome), ORACLES[variant](g, k).decision,
                msg="{} {} graph {} k={} rule {}".format(
                    variant, g.edges(), i, k, rule
                )
            )
            checked += 1
        return checked

    def test_atlas(self):
        seen = {}
        graphs = atlas(6, connected=True)
        for variant in ORACLES:
            self.assertEqual(self.check_corpus(variant, graphs, seen),
                             len(graphs))
        for variant in ORACLES:
            self.assertTrue(
                {"ISOLATED", "SMALL", "PREP", "COMBINED", "GREEDY"}
                <= seen[variant], msg=variant
            )

    def test_seeded(self):
        seen = {}
        graphs = random_corpus(300, 8, seed=4100, min_n=2)
        self.assertEqual(self.check_corpus("ucivs", graphs, seen), 300)
        self.assertGreater(self.check_corpus("ucevs", graphs, seen), 100)


class TestSmallDegree(unittest.TestCase):
    """k = 1 and d = 1: the greedy stops at 4 vertices."""

    def test_leftover_kernel(self):
        # P3 0-1-2 and two K2s; splitting 1 leaves 4 K2s
        g = Graph(7, [(0, 1), (1, 2), (3, 4), (5, 6)])
        for variant, kernel in (("ucevs", kernelize_ucevs),
                                ("ucivs", kernelize_ucivs)):
            outcome = kernel(g, 1)
            self.assertTrue(outcome.reduced)
            self.assertEqual(outcome.trace[-1].rule, "CASE2")
            self.assertEqual(outcome.instance.k, 0)
            self.assertEqual(outcome.instance.graph.labels, (3, 4, 5, 6))
            self.assertEqual(sorted(outcome.family), [(0, 1), (1, 2)])
            self.assertTrue(resolve(outcome))
            answer = ORACLES[variant](outcome.instance.graph, 0)
            w = lift_witness(outcome, answer.witness, answer.family)
            verify_witness(Instance(g, 1, variant), w)

    def test_leftover_charges_touched(self):
        # the centre of a 3-star needs two splits
        g = Graph(6, [(0, 1), (0, 2), (0, 3), (4, 5)])
        for variant, kernel in (("ucevs", kernelize_ucevs),
                                ("ucivs", kernelize_ucivs)):
            outcome = kernel(g, 1)
            self.assertEqual(outcome.decision, NO)
            self.assertEqual(outcome.trace[-1].rule, "GREEDY")
            self.assertFalse(ORACLES[variant](g, 1).decision)
            self.assertTrue(resolve(kernel(g, 2)))

    def test_stop_at(self):
        g = Graph(6, [(0, 1), (0, 2), (0, 3), (4, 5)])
        run = run_greedy(g, 2, 1, PARTITION, stop_at=4)
        self.assertEqual(run.parts, [(0, 1), (0, 2)])
        self.assertEqual(run.cost, 1)
        self.assertEqual(run.graph.labels, (0, 3, 4, 5))
        self.assertEqual(run.touched(), [0])
        run = run_greedy(g, 2, 1, PARTITION)
        self.assertEqual(run.graph.n, 0)
        self.assertEqual(run.cost, 2)
        self.assertIsNone(run_greedy(g, 1, 1, PARTITION))


if __name__ == '__main__':
    unittest.main()
