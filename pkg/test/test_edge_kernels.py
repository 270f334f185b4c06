import unittest

from UCluster.Graph import Graph, to_mask
from UCluster.Kernels import (
    DegreeProfile, prepare_degree_profile, isolated_cliques, retention_drop,
    kernelize_ucee, kernelize_uced, kernelize_ucea, kernel_bound,
    ucee_bound, uced_bound, ucea_bound, KernelContext, UCEE_RULES,
    UCED_RULES, UCEA_RULES, YES, NO, SMALL,
)
from UCluster._Instance import Instance
from UCluster.Oracle import oracle_edge
from UCluster.utils.corpus import (
    named_graph, path, complete, disjoint_union
)
from UCluster.utils.generate import random_corpus, generate_planted

MODES = {"ucee": "edit", "uced": "delete", "ucea": "add"}
KERNELS = {"ucee": kernelize_ucee, "uced": kernelize_uced,
           "ucea": kernelize_ucea}
RULES = {"ucee": UCEE_RULES, "uced": UCED_RULES, "ucea": UCEA_RULES}


def resolve(outcome):
    if outcome.decided:
        return outcome.decision == YES
    reduced = outcome.instance
    return oracle_edge(
        reduced.graph, reduced.k, MODES[outcome.variant]
    ).decision


def first_firing(variant, g, k):
    """Context with the degree profile in place and the first rule of the
    variant that fires on it; (None, None) when preparation decides."""
    profile = prepare_degree_profile(g, k, variant)
    if not isinstance(profile, DegreeProfile):
        return None, None
    ctx = KernelContext(Instance(g, k, variant))
    ctx.params["d"] = profile.d
    ctx.params["profile"] = profile
    for rule in RULES[variant]:
        firing = rule(ctx)
        if firing is not None:
            return ctx, firing
    return ctx, None


class TestDegreeProfile(unittest.TestCase):

    def test_two_triangles_and_p3(self):
        g = disjoint_union(complete(3), complete(3), path(3))
        profile = prepare_degree_profile(g, 1)
        self.assertIsInstance(profile, DegreeProfile)
        self.assertEqual(profile.d, 2)
        self.assertEqual(profile.deviants, (6, 8))

    def test_small(self):
        self.assertEqual(prepare_degree_profile(complete(2), 1), SMALL)

    def test_mixed_small(self):
        g = disjoint_union(Graph(5), *[complete(2)] * 5)
        self.assertEqual(prepare_degree_profile(g, 4), SMALL)

    def test_no_common_degree(self):
        g = disjoint_union(named_graph("paw"), Graph(1))
        self.assertEqual(prepare_degree_profile(g, 1), NO)

    def test_case_tag(self):
        g = disjoint_union(complete(3), complete(3), path(3))
        self.assertEqual(prepare_degree_profile(g, 1, "uced").case, "large-d")
        self.assertEqual(prepare_degree_profile(g, 1, "ucee").case, "small-d")


class TestRetention(unittest.TestCase):

    def test_isolated_cliques(self):
        g = disjoint_union(complete(3), path(3), complete(3), complete(2))
        self.assertEqual(isolated_cliques(g, 3),
                         [to_mask([0, 1, 2]), to_mask([6, 7, 8])])

    def test_keep_enough(self):
        g = disjoint_union(*[complete(3)] * 5)
        # one triangle already gives 2k + 1 = 3 vertices
        self.assertEqual(retention_drop(g, 2, 1), to_mask(range(3, 15)))

    def test_keep_all(self):
        g = disjoint_union(*[complete(3)] * 2)
        self.assertEqual(retention_drop(g, 2, 3), 0)


class TestBounds(unittest.TestCase):

    def test_values(self):
        self.assertEqual(ucee_bound(1), 56)
        self.assertEqual(ucee_bound(2), 203)
        self.assertEqual(uced_bound(3), 18)
        self.assertEqual(ucea_bound(3), 15)
        self.assertEqual(kernel_bound("uced", 2), 12)


class TestKernelizeUCEE(unittest.TestCase):

    def test_bridged_triangles(self):
        self.assertTrue(resolve(kernelize_ucee(named_graph("two-k3-bridge"), 1)))

    def test_p3_two_triangles(self):
        self.assertTrue(resolve(kernelize_ucee(named_graph("p3-two-k3"), 1)))

    def test_k5_k3(self):
        g = disjoint_union(complete(5), complete(3))
        self.assertFalse(resolve(kernelize_ucee(g, 1)))

    def test_planted(self):
        g = generate_planted(3, 4, add_count=1, seed=3)
        self.assertTrue(resolve(kernelize_ucee(g, 1)))


class TestKernelizeUCED(unittest.TestCase):

    def test_bridged_triangles(self):
        self.assertTrue(resolve(kernelize_uced(named_graph("two-k3-bridge"), 1)))

    def test_p3_small(self):
        outcome = kernelize_uced(named_graph("p3"), 1)
        self.assertTrue(outcome.small)
        self.assertFalse(resolve(outcome))

    def test_k4(self):
        outcome = kernelize_uced(complete(4), 0)
        self.assertEqual(outcome.decision, YES)


class TestKernelizeUCEA(unittest.TestCase):

    def test_close_p3(self):
        g = disjoint_union(path(3), complete(3))
        self.assertTrue(resolve(kernelize_ucea(g, 1)))

    def test_k3_k2(self):
        g = disjoint_union(complete(3), complete(2))
        self.assertFalse(resolve(kernelize_ucea(g, 1)))

    def test_two_triangles(self):
        outcome = kernelize_ucea(disjoint_union(complete(3), complete(3)), 0)
        self.assertEqual(outcome.decision, YES)


class TestSingleRules(unittest.TestCase):

    def check(self, variant, g, k, rule=None):
        """One firing never changes the answer; returns the rule name."""
        ctx, firing = first_firing(variant, g, k)
        if firing is None:
            return None
        if rule is not None:
            self.assertEqual(firing.rule, rule)
        before = oracle_edge(g, k, MODES[variant]).decision
        msg = "{} {} k={} {}".format(variant, g.edges(), k, firing.rule)
        if firing.decision == YES:
            self.assertTrue(before, msg=msg)
        elif firing.decision == NO:
            self.assertFalse(before, msg=msg)
        elif firing.decision is None:
            ctx.apply(firing)
            after = ctx.k >= 0 and oracle_edge(
                ctx.graph, ctx.k, MODES[variant]
            ).decision
            self.assertEqual(before, after, msg=msg)
        return firing.rule

    def test_uced_rules(self):
        self.check("uced", disjoint_union(complete(3), complete(3), Graph(1)),
                   1, "EED1")
        self.check("uced", named_graph("c5"), 1, "EED3")
        self.check("uced", named_graph("two-k3-bridge"), 1, "EED4")
        self.check("uced", disjoint_union(complete(2), Graph(3)), 1, "EED5")

    def test_ucea_rules(self):
        self.check("ucea", disjoint_union(complete(3), complete(3), Graph(1)),
                   1, "EEA1")
        self.check("ucea", disjoint_union(path(3), complete(3)), 1, "EEA3")
        g = disjoint_union(Graph(1), *[complete(2)] * 3)
        self.check("ucea", g, 1, "EEA4")
        self.check("ucea", disjoint_union(complete(3), complete(2)), 1, "EEA5")

    def test_ucee_rules(self):
        self.check("ucee", disjoint_union(complete(3), complete(3), Graph(1)),
                   1, "EEER0")
        self.check("ucee", disjoint_union(path(3), path(3)), 1, "P3PACK")
        self.check("ucee", disjoint_union(complete(2), Graph(4)), 1, "EEER6")

    def test_corpus(self):
        for variant, seed in (("ucee", 505), ("uced", 606), ("ucea", 707)):
            seen = set()
            for i, g in enumerate(random_corpus(200, 8, seed=seed, min_n=5)):
                rule = self.check(variant, g, 1 + i % 2)
                if rule is not None:
                    seen.add(rule)
            self.assertGreater(len(seen), 1, msg=variant)


class TestAgainstOracle(unittest.TestCase):

    def check(self, variant, seed):
        for i, g in enumerate(random_corpus(500, 8, seed=seed, min_n=2)):
            k = i % 3
            outcome = KERNELS[variant](g, k)
            self.assertEqual(
                resolve(outcome), oracle_edge(g, k, MODES[variant]).decision,
                msg="{} graph {} k={}".format(variant, i, k)
            )
            if outcome.reduced and not outcome.small:
                self.assertLessEqual(outcome.instance.graph.n,
                                     kernel_bound(variant, k))

    def test_ucee(self):
        self.check("ucee", 101)

    def test_uced(self):
        self.check("uced", 202)

    def test_ucea(self):
        self.check("ucea", 303)

    def test_forced_edits_replay(self):
        for i, g in enumerate(random_corpus(40, 8, seed=404, min_n=5)):
            outcome = kernelize_ucee(g, 2)
            for u, v, op in outcome.forced_edits:
                self.assertIn(op, ("delete", "add"))
                self.assertEqual(g.has_edge(u, v), op == "delete")


if __name__ == '__main__':
    unittest.main()
