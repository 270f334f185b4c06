import unittest

from UCluster._Instance import Instance, Witness, verify_witness
from UCluster._Exceptions import CapacityException
from UCluster.Oracle import oracle_dway_cut, clique_dway_cuts, oracle_edge
from UCluster.Solvers import (
    DenseContext, heavy_set_L, reconstruct_from_cut, h_guesses, try_h,
    dense_search, solve_uced_dense,
)
from UCluster.Solvers._UCEDDense import _incomplete_reason
from UCluster.utils.corpus import complete, disjoint_union
from UCluster.utils.generate import generate_planted, rng_for


def two_cliques(size, cross):
    """Two disjoint size-cliques, 0..size-1 and size..2*size-1, plus the
    cross edges."""
    return disjoint_union(complete(size), complete(size)).add_edges(cross)


def blocks(num_cliques, size):
    return [tuple(range(i * size, (i + 1) * size))
            for i in range(num_cliques)]


CORPUS = [
    (two_cliques(6, [(0, 6)]), 1, True),
    (two_cliques(6, [(0, 6), (1, 7)]), 1, False),
    (two_cliques(6, [(0, 6), (1, 7)]), 2, True),
    (two_cliques(7, [(0, 7), (1, 8)]), 2, True),
    (two_cliques(7, [(0, 7)]), 2, True),
    (two_cliques(5, [(0, 5)]), 1, True),
    (two_cliques(5, []), 1, True),
    (two_cliques(4, [(i, 4 + i) for i in range(4)]), 4, True),
    (two_cliques(4, [(i, 4 + i) for i in range(4)]), 3, False),
    (two_cliques(5, [(i, 5 + i) for i in range(5)]), 5, True),
]

SHAPES = [(2, 4), (2, 5), (2, 6), (2, 7), (3, 4)]


def planted_corpus():
    """(g, k, cliques) where deleting the k cross edges is the only solution.

    Random cross edges number at most size - 2, so no mixed clique and no
    other clique size fits the budget.  A matching of size - 1 or size edges
    between two cliques makes one-vertex cuts as cheap as the planted one."""
    out = []
    for seed in range(40):
        num, size = SHAPES[seed % len(SHAPES)]
        r = int(rng_for(seed).integers(1, size - 1))
        g = generate_planted(num, size, add_count=r, seed=seed)
        out.append((g, r, blocks(num, size)))
    for size in (4, 5, 6, 7):
        for m in (size - 1, size):
            for seed in range(3):
                perm = rng_for(100 * size + 10 * m + seed).permutation(size)
                cross = [(i, size + int(perm[i])) for i in range(m)]
                out.append((two_cliques(size, cross), m, blocks(2, size)))
    return out


class TestDenseParts(unittest.TestCase):

    def test_heavy_set(self):
        g = two_cliques(6, [(0, 6)])
        self.assertEqual(heavy_set_L(g, 5, 1), (0, 6))
        self.assertEqual(heavy_set_L(g, 6, 1), ())

    def test_h_guesses(self):
        # minimum degree 5, so clique sizes from 4 up that divide 12
        self.assertEqual(h_guesses(two_cliques(6, [(0, 6)]), 1), [3, 5, 11])

    def test_reconstruct(self):
        g = two_cliques(6, [(0, 6)])
        parts = [(1, 2, 3, 4, 5), (7, 8, 9, 10, 11)]
        self.assertEqual(reconstruct_from_cut(g, (0, 6), parts, 5, 1),
                         [(0, 6)])
        # the two cut parts cannot both be completed within budget 0
        self.assertIsNone(reconstruct_from_cut(g, (0, 6), parts, 5, 0))
        # wrong number of free slots
        self.assertIsNone(reconstruct_from_cut(g, (0,), parts, 5, 1))

    def test_try_h(self):
        g = two_cliques(6, [(0, 6)])
        found = try_h(g, 1, 5)
        self.assertIsInstance(found[0], DenseContext)
        self.assertEqual(found[0].L, (0, 6))
        self.assertEqual(found[0].d_parts, 2)
        self.assertEqual(found[1], [(0, 6)])
        # |L| = 12 > 2 sqrt(k)
        self.assertIsNone(try_h(g, 1, 3))

    def test_cut_oracle_errors(self):
        def failing(g, d, budget, token=None):
            raise CapacityException("dway_max_vertices", g.n, 0)

        with self.assertRaises(CapacityException):
            try_h(two_cliques(6, [(0, 6)]), 1, 5, cut_oracle=failing)

    def test_clique_cuts(self):
        matching = [(i, 4 + i) for i in range(4)]
        g = two_cliques(4, matching)
        self.assertEqual(list(clique_dway_cuts(g, 2, 4)),
                         [(matching, [(0, 1, 2, 3), (4, 5, 6, 7)])])
        self.assertEqual(list(clique_dway_cuts(g, 2, 3)), [])
        self.assertEqual(list(clique_dway_cuts(g, 3, 16, max_part=2)), [])

    def test_tied_cut_rebuilds(self):
        # a one-vertex cut costs as much as the matching between the cliques
        matching = [(i, 4 + i) for i in range(4)]
        g = two_cliques(4, matching)
        self.assertEqual(len(oracle_dway_cut(g, 2, 4)[0]), 4)
        dense, edges = try_h(g, 4, 3)
        self.assertEqual(dense.L, ())
        self.assertEqual(dense.cut, (matching, [(0, 1, 2, 3), (4, 5, 6, 7)]))
        self.assertEqual(edges, matching)

    def test_incomplete_reason(self):
        # 0 and 1 have degree 3: at h = 1 both are in L and could form a pair
        g = disjoint_union(complete(2), complete(2), complete(2)).add_edges(
            [(0, 2), (0, 3), (1, 4), (1, 5)]
        )
        hs = h_guesses(g, 4)
        self.assertEqual(hs, [0, 1, 2, 5])
        self.assertEqual(heavy_set_L(g, 1, 4), (0, 1))
        self.assertEqual(_incomplete_reason(g, 4, hs),
                         "L may hold a whole clique")
        # pairs fit a budget of 8 on two disjoint 4-cliques
        g = two_cliques(4, [])
        self.assertIsNone(_incomplete_reason(g, 8, h_guesses(g, 8)))
        self.assertEqual(_incomplete_reason(g, 8, [3, 7]),
                         "clique size 2 below the guessed sizes")
        self.assertIsNone(
            _incomplete_reason(two_cliques(6, [(0, 6)]), 1, [3, 5, 11])
        )


class TestDenseSearch(unittest.TestCase):

    def test_corpus(self):
        for g, k, expected in CORPUS:
            w = solve_uced_dense(g, k, lower_guard=True)
            self.assertEqual(w is not None, expected, msg=repr(g))
            self.assertEqual(oracle_edge(g, k, "delete").decision, expected)
            if w is not None:
                verify_witness(Instance(g, k, "uced"), w)

    def test_tied_matchings(self):
        for size in (4, 5):
            matching = [(i, size + i) for i in range(size)]
            g = two_cliques(size, matching)
            w = solve_uced_dense(g, size, lower_guard=True)
            self.assertEqual(list(w.items), matching)
            self.assertEqual(verify_witness(Instance(g, size, "uced"), w),
                             size)
            self.assertTrue(oracle_edge(g, size, "delete").decision)

    def test_planted_cut_path(self):
        corpus = planted_corpus()
        self.assertGreaterEqual(len(corpus), 50)
        for g, k, cliques in corpus:
            found = dense_search(g, k, lower_guard=True)
            self.assertIsInstance(found, tuple, msg=repr(g))
            dense, edges = found
            expected = [tuple(v for v in c if v not in dense.L)
                        for c in cliques]
            self.assertEqual(sorted(dense.cut[1]), sorted(expected),
                             msg=repr(g))
            self.assertEqual(dense.h + 1, len(cliques[0]))
            self.assertEqual(len(edges), k)
            size = verify_witness(Instance(g, k, "uced"),
                                  Witness("uced", edges))
            self.assertEqual(size, len(cliques[0]))
            if k >= 2:
                self.assertIsNone(dense_search(g, k - 1, lower_guard=True),
                                  msg=repr(g))

    def test_cut_path_taken(self):
        g = two_cliques(7, [(0, 7), (1, 8)])
        found = dense_search(g, 2, lower_guard=True)
        self.assertIsInstance(found, tuple)
        self.assertEqual(found[0].L, ())
        self.assertEqual(found[1], [(0, 7), (1, 8)])

    def test_pluggable_oracle(self):
        calls = []

        def counting(g, d, budget, token=None):
            calls.append(d)
            return oracle_dway_cut(g, d, budget, token=token)

        g = two_cliques(6, [(0, 6)])
        w = solve_uced_dense(g, 1, cut_oracle=counting, lower_guard=True)
        self.assertEqual(w.items, ((0, 6),))
        self.assertEqual(calls, [2])

    def test_fallback_small(self):
        g = two_cliques(6, [(0, 6)])
        self.assertIsInstance(dense_search(g, 1), str)
        self.assertIsInstance(dense_search(g, 1, dense_guard=1), str)
        w = solve_uced_dense(g, 1)
        self.assertEqual(w.items, ((0, 6),))

    def test_fallback_zero_budget(self):
        g = two_cliques(6, [(0, 6)])
        self.assertIsInstance(dense_search(g, 0, lower_guard=True), str)
        self.assertIsNone(solve_uced_dense(g, 0, lower_guard=True))
        self.assertEqual(
            solve_uced_dense(two_cliques(6, []), 0, lower_guard=True).size, 0
        )

    def test_workers(self):
        g = two_cliques(6, [(0, 6)])
        w = solve_uced_dense(g, 1, lower_guard=True, workers=2)
        verify_witness(Instance(g, 1, "uced"), w)


if __name__ == '__main__':
    unittest.main()
