__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Branch-and-reduce solver for Uniform Cluster Edge Deletion.

The clique size c is guessed first and kept fixed.  For a fixed c the number
of deletions is m - (n/c) * c(c-1)/2 whatever the solution looks like, so the
guesses are tried cheapest first and the first feasible one is a minimum.

Inside one guess:

    edge with score s >= 3     delete it, or delete its s companions   (1, s)
    induced C4 a-b-c-d         delete {ab, cd}, or delete {bc, da}     (2, 2)
    otherwise                  every component is a score-2 shape and is
                               solved on its own
"""

import logging
from collections import Counter

from UCluster.Graph import (
    edge_score, companion_edges, find_induced_c4
)
from UCluster._Instance import Witness
from UCluster.Managers import WorkerPool, check_token
from UCluster.Solvers._Score2 import (
    solve_score2_component, component_edges_to_root
)

logger = logging.getLogger(__name__)

POLL_INTERVAL = 512


class BranchStats(object):
    """Search-tree node count and the branching vectors used."""

    def __init__(self):
        self.nodes = 0
        self.vectors = Counter()

    def record(self, vector):
        assert vector == (2, 2) or (vector[0] == 1 and vector[1] >= 3), \
            "branching vector {} breaks the 1.47 recurrence".format(vector)
        self.vectors[vector] += 1

    def merge(self, other):
        self.nodes += other.nodes
        self.vectors.update(other.vectors)

    def __repr__(self):
        return "BranchStats(nodes={}, vectors={})".format(
            self.nodes, dict(self.vectors)
        )


def pick_branch_edge(g):
    """First edge (in sorted order) with score at least 3, or None."""
    for e in g.edges():
        if edge_score(g, e) >= 3:
            return e
    return None


def required_deletions(n, m, c):
    """Deletions any solution with clique size c makes, or None if c does
    not divide n or more edges would have to stay than there are."""
    if c < 1 or n % c:
        return None
    need = m - (n // c) * c * (c - 1) // 2
    return need if need >= 0 else None


def _solve_leaf(h, c, budget, bruteforce_limit, memo):
    edges = []
    total = 0
    for comp_mask in h.component_masks():
        comp = h.induced(comp_mask)
        solution = solve_score2_component(comp, c, bruteforce_limit, memo)
        if not solution.feasible:
            return None
        total += solution.cost
        if total > budget:
            return None
        edges.extend(component_edges_to_root(comp, solution))
    return edges


def branch_for_size(g, c, budget, bruteforce_limit=None, token=None,
                    stats=None):
    """Deletion set (ids of g) of size <= budget leaving disjoint c-cliques,
    or None."""
    if stats is None:
        stats = BranchStats()
    memo = {}

    def branch(h, budget, deleted):
        if budget < 0:
            return None
        stats.nodes += 1
        if stats.nodes % POLL_INTERVAL == 0:
            check_token(token)
        e = pick_branch_edge(h)
        if e is not None:
            companions = companion_edges(h, e)
            stats.record((1, len(companions)))
            found = branch(h.remove_edges([e]), budget - 1, deleted + [e])
            if found is not None:
                return found
            return branch(
                h.remove_edges(companions), budget - len(companions),
                deleted + companions
            )
        c4 = find_induced_c4(h)
        if c4 is not None:
            a, b, x, d = c4
            stats.record((2, 2))
            for pair in (((a, b), (x, d)), ((b, x), (a, d))):
                pair = [tuple(sorted(p)) for p in pair]
                found = branch(h.remove_edges(pair), budget - 2, deleted + pair)
                if found is not None:
                    return found
            return None
        rest = _solve_leaf(h, c, budget, bruteforce_limit, memo)
        if rest is None:
            return None
        return deleted + rest

    found = branch(g, budget, [])
    if found is None:
        return None
    return sorted(g.root_edge(e) for e in found)


def _guess(g, c, budget, bruteforce_limit):
    stats = BranchStats()
    found = branch_for_size(g, c, budget, bruteforce_limit, stats=stats)
    return found, stats


def solve_uced(g, k, workers=1, token=None, bruteforce_limit=None, stats=None):
    """Minimum witness for (g, k) as uced, or None."""
    # ids of g itself, whatever graph it was derived from
    g = g.relabel(tuple(range(g.n)))
    if stats is None:
        stats = BranchStats()
    guesses = []
    for c in range(1, g.n + 1):
        need = required_deletions(g.n, g.m, c)
        if need is not None and need <= k:
            guesses.append((need, c))
    guesses.sort()
    logger.debug("uced: clique size guesses {}".format(
        [c for _, c in guesses]
    ))
    if g.n == 0:
        return Witness("uced", ())
    found = None
    if workers > 1 and len(guesses) > 1:
        results = WorkerPool(workers).map(
            _guess, [(g, c, need, bruteforce_limit) for need, c in guesses]
        )
        for edges, sub in results:
            stats.merge(sub)
            if found is None and edges is not None:
                found = edges
    else:
        for need, c in guesses:
            found = branch_for_size(g, c, need, bruteforce_limit, token, stats)
            if found is not None:
                logger.debug("uced: c={} deletes {}".format(c, need))
                break
    logger.info("uced: {}".format(stats))
    if found is None:
        return None
    return Witness("uced", found)
