__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""4k kernels for exclusive (ucevs) and inclusive (ucivs) vertex splitting.

A vertex that is never split keeps its degree, and in the final graph its
clique is its closed neighbourhood.  At most k vertices are split, so with
|V| > 2k the final clique size is d+1 for the degree d shared by at least
|V| - k vertices.

Both kernels run the same greedy: take the smallest vertex of current degree
d, add N[v] as a part and drop the members of N[v] whose current degree is
d.  With d >= 2k it runs to the end and decides the instance.  With d < 2k
it stops as soon as at most 4k vertices are left; the leftover graph is the
kernel, and its budget is k less the cost so far less one for every leftover
vertex that is already in a part and still has edges.  Costs are running
totals over the ids of the input graph.
"""

import itertools
import logging

from UCluster.Graph import bits
from UCluster._Instance import Instance
from UCluster.Kernels._KernelOutcome import KernelContext, YES, NO, SMALL
from UCluster.Kernels._CliqueFamily import CliqueFamily, PARTITION, COVER

logger = logging.getLogger(__name__)


def split_bound(k):
    return 4 * k


def split_profile(g, k):
    """The degree shared by at least |V| - k vertices, or None."""
    counts = {}
    for deg in g.degrees():
        counts[deg] = counts.get(deg, 0) + 1
    for d in sorted(counts):
        if counts[d] >= g.n - k:
            return d
    return None


def combined_rule(g, k, d):
    """Name of the failing check of the combined reduction rule, or None
    when the instance passes."""
    high = 0
    for v in range(g.n):
        deg = g.degree(v)
        if deg < d:
            return "degree below {}".format(d)
        if deg > d:
            high += 1
        elif not g.is_clique(g.closed(v)):
            return "N[{}] is not a clique".format(v)
    if high > k:
        return "{} vertices of degree above {}".format(high, d)
    return None


class GreedyRun(object):
    """Where the greedy stopped: the graph left over, the parts taken (in the
    labels of the input graph), the frequency of every label in them and the
    running cost."""

    __slots__ = ("graph", "parts", "freq", "cost", "covered")

    def __init__(self, graph):
        self.graph = graph
        self.parts = []
        self.freq = {}
        self.cost = 0
        self.covered = set()

    def touched(self):
        """Vertices of the leftover graph already in some part."""
        g = self.graph
        return [v for v in range(g.n) if g.labels[v] in self.freq]


def first_of_degree(g, d):
    for v in range(g.n):
        if g.degree(v) == d:
            return v
    return None


def run_greedy(g, k, d, kind, stop_at=None):
    """The greedy family algorithm on g, or None when it answers no.

    While the graph is not empty, take the smallest vertex v whose degree in
    the current graph is d, add N[v] as a part and remove the members of
    N[v] whose current degree is d.  N[v] must be a clique, the running cost
    must stay within k and, for a partition, no edge may lie in two parts.
    With stop_at the loop also ends once at most stop_at vertices are left.
    """
    run = GreedyRun(g)
    while run.graph.n and (stop_at is None or run.graph.n > stop_at):
        cur = run.graph
        v = first_of_degree(cur, d)
        if v is None:
            logger.debug("greedy: no vertex of degree {}".format(d))
            return None
        part = cur.closed(v)
        if not cur.is_clique(part):
            logger.debug("greedy: N[{}] is not a clique".format(cur.labels[v]))
            return None
        labels = tuple(sorted(cur.labels[u] for u in bits(part)))
        if kind == PARTITION:
            edges = set(itertools.combinations(labels, 2))
            if edges & run.covered:
                logger.debug("greedy: {} reuses an edge".format(labels))
                return None
            run.covered |= edges
        for x in labels:
            run.freq[x] = run.freq.get(x, 0) + 1
            if run.freq[x] > 1:
                run.cost += 1
        if run.cost > k:
            logger.debug("greedy: cost {} over {}".format(run.cost, k))
            return None
        run.parts.append(labels)
        done = 0
        for u in bits(part):
            if cur.degree(u) == d:
                done |= 1 << u
        run.graph = cur.remove_vertices(done)
    return run


def greedy_kd_edge_partition(g, k, d):
    """Partition of E into (d+1)-cliques with cost <= k, or None."""
    run = run_greedy(g, k, d, PARTITION)
    if run is None:
        return None
    return CliqueFamily(run.parts, PARTITION)


def greedy_sigma_cover(g, k, d):
    """Cover of E by (d+1)-cliques with cost <= k, or None."""
    run = run_greedy(g, k, d, COVER)
    if run is None:
        return None
    return CliqueFamily(run.parts, COVER)


def _kernelize(g, k, variant):
    kind = PARTITION if variant == "ucevs" else COVER
    ctx = KernelContext(Instance(g, k, variant))
    if any(a == 0 for a in g.adjacency):
        return ctx.decide("ISOLATED", YES if g.m == 0 else NO)
    if g.n <= 2 * k:
        return ctx.reduce(SMALL)
    d = split_profile(g, k)
    if d is None:
        return ctx.decide("PREP", NO)
    failed = combined_rule(g, k, d)
    if failed is not None:
        logger.debug("{}: combined rule: {}".format(variant, failed))
        return ctx.decide("COMBINED", NO)
    if d >= 2 * k:
        run = run_greedy(g, k, d, kind)
        if run is None:
            return ctx.decide("GREEDY", NO)
        ctx.family.extend(run.parts)
        ctx.k -= run.cost
        return ctx.decide("GREEDY", YES)
    if g.n <= 4 * k:
        return ctx.reduce("CASE2")
    run = run_greedy(g, k, d, kind, stop_at=4 * k)
    if run is None:
        return ctx.decide("GREEDY", NO)
    ctx.family.extend(run.parts)
    rest = run.graph
    if kind == PARTITION:
        # covered edges between leftover vertices cannot be taken again
        inside = [e for e in rest.edges() if rest.root_edge(e) in run.covered]
        rest = rest.remove_edges(inside)
    touched = run.touched()
    # a touched vertex with edges left sits in one more part at least
    again = [v for v in touched if rest.degree(v)]
    finished = [v for v in touched if not rest.degree(v)]
    ctx.graph = rest.remove_vertices(finished)
    kept = set(ctx.graph.labels)
    ctx.k = k - run.cost - len(again)
    ctx.note("GREEDY", sorted(x for x in g.labels if x not in kept))
    if ctx.k < 0:
        return ctx.decide("GREEDY", NO)
    if ctx.graph.n == 0:
        return ctx.decide("GREEDY", YES)
    return ctx.reduce("CASE2")


def kernelize_ucevs(g, k):
    outcome = _kernelize(g, k, "ucevs")
    logger.info("ucevs kernel: {}".format(outcome))
    return outcome


def kernelize_ucivs(g, k):
    outcome = _kernelize(g, k, "ucivs")
    logger.info("ucivs kernel: {}".format(outcome))
    return outcome
