__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""2^k FPT algorithm for Uniform Cluster Vertex Deletion.

A cluster vertex deletion set X of size <= k is found first.  For every
subset X_in of X the vertices of X_in are deleted and the rest of X becomes
undeletable, which leaves a Disjoint UCVD instance solved in polynomial time:

    for every exact budget k' and clique size c:
        X_out cliques of size c are finished: delete N(C), set C aside
        p = (remaining vertices - remaining budget) / c   final clique count
        A = X_out cliques smaller than c, plus dummy slots up to p
        B = cliques of H = G' - X_out
        a yes-configuration exists iff the eligibility graph A x B has an
        A-saturated matching

Each matched pair keeps the lowest-id eligible vertices of its H clique and
everything else in H is deleted.
"""

import itertools
import logging

from networkx import Graph as BipartiteGraph
from networkx.algorithms.bipartite import hopcroft_karp_matching

from UCluster.Graph import (
    bits, popcount, to_mask, to_tuple, clique_masks, is_uniform_cluster
)
from UCluster._Instance import Witness
from UCluster.Managers import WorkerPool, check_token
from UCluster.Solvers._CVD import cvd_branching

logger = logging.getLogger(__name__)


class DisjointInstance(object):
    """Graph G', undeletable vertices X_out and a budget k."""

    __slots__ = ("graph", "x_out", "k")

    def __init__(self, graph, x_out, k):
        self.graph = graph
        self.x_out = tuple(sorted(x_out))
        self.k = k

    def __repr__(self):
        return "DisjointInstance(n={}, x_out={}, k={})".format(
            self.graph.n, list(self.x_out), self.k
        )


def _donors(g, clique_a, clique_b):
    """Vertices of clique_b adjacent to every vertex of clique_a."""
    out = 0
    for v in bits(clique_b):
        if clique_a & ~g.adj(v) == 0:
            out |= 1 << v
    return out


def _x_free(g, clique_b, x_mask):
    out = 0
    for v in bits(clique_b):
        if not g.adj(v) & x_mask:
            out |= 1 << v
    return out


def build_completion_matching(g, x_cliques, h_cliques, c, p):
    """Maximum matching of the completion graph and whether it saturates A.

    A holds the X_out cliques (all smaller than c) followed by p - len(x)
    dummy slots; B holds the H cliques.  Returns (matching, saturated) with
    matching a dict from A index to B index, or (None, False) when p is
    smaller than the number of X_out cliques."""
    if p < len(x_cliques):
        return None, False
    x_mask = 0
    for C in x_cliques:
        x_mask |= C
    size_a = p
    graph = BipartiteGraph()
    top = [("a", i) for i in range(size_a)]
    graph.add_nodes_from(top)
    graph.add_nodes_from(("b", j) for j in range(len(h_cliques)))
    for i in range(size_a):
        for j, Cb in enumerate(h_cliques):
            if i < len(x_cliques):
                Ca = x_cliques[i]
                eligible = popcount(_donors(g, Ca, Cb)) >= c - popcount(Ca)
            else:
                eligible = popcount(_x_free(g, Cb, x_mask)) >= c
            if eligible:
                graph.add_edge(("a", i), ("b", j))
    if size_a == 0:
        return {}, True
    raw = hopcroft_karp_matching(graph, top_nodes=top)
    matching = {}
    for node, other in raw.items():
        if node[0] == "a":
            matching[node[1]] = other[1]
    return matching, len(matching) == size_a


def _reconstruct(g, x_cliques, h_cliques, c, matching, alive, x_mask):
    keep = 0
    for i, j in matching.items():
        Cb = h_cliques[j]
        if i < len(x_cliques):
            Ca = x_cliques[i]
            take = to_tuple(_donors(g, Ca, Cb))[:c - popcount(Ca)]
        else:
            take = to_tuple(_x_free(g, Cb, x_mask))[:c]
        keep |= to_mask(take)
    return alive & ~x_mask & ~keep


def solve_disjoint_ucvd(di, token=None):
    """Deletion set avoiding X_out of size <= k that leaves a uniform cluster
    graph, as a sorted tuple of ids of di.graph, or None."""
    g = di.graph
    X = to_mask(di.x_out)
    alive = g.all_mask
    # rule 1
    x_cliques_all = clique_masks(g, X)
    if x_cliques_all is None or clique_masks(g, alive & ~X) is None:
        return None
    # rule 2
    forced = 0
    budget = di.k
    for v in bits(alive & ~X):
        touched = sum(1 for C in x_cliques_all if g.adj(v) & C)
        if touched >= 2:
            forced |= 1 << v
            budget -= 1
    if budget < 0:
        return None
    alive &= ~forced
    n = popcount(alive)
    for k_exact in range(0, budget + 1):
        for c in range(1, max(n, 1) + 1):
            check_token(token)
            found = _solve_guess(g, alive, X, x_cliques_all, k_exact, c)
            if found is None:
                continue
            deleted = forced | found
            if (popcount(deleted) == di.k - budget + k_exact
                    and is_uniform_cluster(g, g.all_mask & ~deleted) is not None):
                logger.debug("disjoint ucvd: k'={} c={} deletes {}".format(
                    k_exact, c, popcount(deleted)
                ))
                return to_tuple(deleted)
    return None


def _solve_guess(g, alive, X, x_cliques, k_exact, c):
    if any(popcount(C) > c for C in x_cliques):
        return None
    # rule 3: finished cliques
    deleted = 0
    open_x = []
    for C in x_cliques:
        if popcount(C) == c:
            around = 0
            for v in bits(C):
                around |= g.adj(v)
            deleted |= around & alive & ~C
            alive &= ~C
        else:
            open_x.append(C)
    alive &= ~deleted
    remaining = k_exact - popcount(deleted)
    if remaining < 0:
        return None
    n_r = popcount(alive)
    if (n_r - remaining) % c or n_r < remaining:
        return None
    p = (n_r - remaining) // c
    h_cliques = clique_masks(g, alive & ~X)
    matching, saturated = build_completion_matching(
        g, open_x, h_cliques, c, p
    )
    if not saturated:
        return None
    x_mask = 0
    for C in open_x:
        x_mask |= C
    return deleted | _reconstruct(g, open_x, h_cliques, c, matching, alive, x_mask)


def _try_subset(g, X, x_in, k, token=None):
    """Witness vertex tuple for the guess X_in, in ids of g, or None."""
    sub = g.remove_vertices(to_mask(x_in))
    index = {label: i for i, label in enumerate(sub.labels)}
    x_out = [index[v] for v in X if v not in x_in]
    di = DisjointInstance(sub, x_out, k - len(x_in))
    found = solve_disjoint_ucvd(di, token)
    if found is None:
        return None
    return tuple(sorted(tuple(x_in) + tuple(sub.labels[v] for v in found)))


def solve_ucvd(g, k, workers=1, token=None):
    """Witness for (g, k) as ucvd, or None."""
    # ids of g itself, whatever graph it was derived from
    g = g.relabel(tuple(range(g.n)))
    X = cvd_branching(g, k, token)
    if X is None:
        logger.info("ucvd: no cluster deletion set of size {}".format(k))
        return None
    guesses = []
    for size in range(len(X) + 1):
        for x_in in itertools.combinations(X, size):
            guesses.append((g, X, x_in, k))
    logger.debug("ucvd: |X|={}, {} guesses".format(len(X), len(guesses)))
    if workers > 1:
        found = WorkerPool(workers).first_success(
            _try_subset, guesses, token=token, pass_token=True
        )
    else:
        found = None
        for args in guesses:
            found = _try_subset(*args, token=token)
            if found is not None:
                break
    if found is None:
        return None
    return Witness("ucvd", found)
