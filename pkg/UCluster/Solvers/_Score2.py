__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Exact UCED on one connected component in which every edge lies in at most
two induced P3s and no induced C4 exists.

For a fixed clique size c every solution keeps exactly (n/c) * c(c-1)/2
edges, so only feasibility depends on the component.  Such components are
cycles, paths, a clique joined to a small graph (every vertex of the clique
part is adjacent to everything) or small sporadic shapes; anything else is
reported as a StructuralException.

    dispatch          condition                     method
    ---------------   ---------------------------   ----------------------
    cycle / path      max degree 2                  closed form
    universal set     at most 5 non-universal       partitions of the rest
    sporadic          n <= MAX_SPORADIC             tiling search
    small             n <= score2_bruteforce_limit  oracle partition search

The sporadic shapes (3-asterisk, 3-sun, fat P4, fat P5) and their connected
induced subgraphs are the only components that are neither paths, cycles nor
clique joins.  None has more than six vertices.
"""

import itertools
import logging

from UCluster.Graph import bits, lowest, popcount, to_mask, norm_edge
from UCluster._Exceptions import StructuralException
from UCluster.Managers import get_config
from UCluster.Oracle import cheapest_equal_partition, edits_for_blocks

logger = logging.getLogger(__name__)

MAX_NON_UNIVERSAL = 5
MAX_SPORADIC = 8


class ComponentSolution(object):
    """Deletion count and edges (component ids) for one clique size, or an
    infeasible marker (cost None)."""

    __slots__ = ("cost", "edges", "method")

    def __init__(self, cost=None, edges=(), method=None):
        self.cost = cost
        self.edges = tuple(sorted(edges))
        self.method = method

    @property
    def feasible(self):
        return self.cost is not None

    def __repr__(self):
        if not self.feasible:
            return "ComponentSolution(infeasible, {})".format(self.method)
        return "ComponentSolution(cost={}, {})".format(self.cost, self.method)


def _from_blocks(g, blocks, method):
    edits = edits_for_blocks(g, blocks, "delete")
    return ComponentSolution(len(edits), edits, method)


def _walk(g, start):
    """Vertices of a path or cycle in traversal order from start."""
    order = [start]
    seen = 1 << start
    while True:
        nxt = g.adj(order[-1]) & ~seen
        if not nxt:
            return order
        order.append(lowest(nxt))
        seen |= nxt & -nxt


def _cycle_or_path(g, c):
    degrees = g.degrees()
    n = g.n
    if max(degrees, default=0) > 2:
        return None
    if g.m == n and n >= 3:
        kind = "cycle"
        order = _walk(g, 0)
    else:
        kind = "path"
        ends = [v for v in range(n) if degrees[v] <= 1]
        order = _walk(g, ends[0])
    method = "closed-{}".format(kind)
    if c == 1:
        return ComponentSolution(g.m, g.edges(), method)
    if c == n and g.is_clique(g.all_mask):
        return ComponentSolution(0, (), method)
    if c == 2 and n % 2 == 0:
        blocks = [to_mask(order[i:i + 2]) for i in range(0, n, 2)]
        return _from_blocks(g, blocks, method)
    return ComponentSolution(None, (), method)


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _universal(g, c):
    full = g.all_mask
    universal = [v for v in range(g.n) if g.closed(v) == full]
    rest = [v for v in range(g.n) if g.closed(v) != full]
    if len(rest) > MAX_NON_UNIVERSAL:
        return None
    method = "universal"
    if g.n % c:
        return ComponentSolution(None, (), method)
    for partition in _set_partitions(rest):
        masks = [to_mask(p) for p in partition]
        if any(popcount(m) > c or not g.is_clique(m) for m in masks):
            continue
        missing = sum(c - popcount(m) for m in masks)
        if missing > len(universal):
            continue
        pool = list(universal)
        blocks = []
        for m in masks:
            need = c - popcount(m)
            blocks.append(m | to_mask(pool[:need]))
            pool = pool[need:]
        for i in range(0, len(pool), c):
            blocks.append(to_mask(pool[i:i + c]))
        return _from_blocks(g, blocks, method)
    return ComponentSolution(None, (), method)


def _tile(g, c, free):
    """c-clique blocks covering free, or None."""
    if not free:
        return []
    v = lowest(free)
    for others in itertools.combinations(bits(g.adj(v) & free), c - 1):
        block = (1 << v) | to_mask(others)
        if not g.is_clique(block):
            continue
        rest = _tile(g, c, free & ~block)
        if rest is not None:
            return [block] + rest
    return None


def _sporadic(g, c):
    if g.n > MAX_SPORADIC:
        return None
    # every tiling keeps the same number of edges, so the first one will do
    blocks = _tile(g, c, g.all_mask)
    if blocks is None:
        return ComponentSolution(None, (), "sporadic")
    return _from_blocks(g, blocks, "sporadic")


def _bruteforce(g, c):
    found = cheapest_equal_partition(g, c, "delete", g.m)
    if found is None:
        return ComponentSolution(None, (), "bruteforce")
    return _from_blocks(g, found[1], "bruteforce")


def _canonical(g):
    return g.adjacency


def solve_score2_component(comp, c, bruteforce_limit=None, memo=None):
    """ComponentSolution for turning the connected graph comp into disjoint
    c-cliques by edge deletions.  Edges are in the ids of comp."""
    if bruteforce_limit is None:
        bruteforce_limit = get_config().score2_bruteforce_limit
    key = (_canonical(comp), c)
    if memo is not None and key in memo:
        return memo[key]
    if comp.n % c:
        solution = ComponentSolution(None, (), "divisor")
    else:
        solution = _cycle_or_path(comp, c)
        if solution is None:
            solution = _universal(comp, c)
        if solution is None:
            solution = _sporadic(comp, c)
        if solution is None and comp.n <= bruteforce_limit:
            solution = _bruteforce(comp, c)
        if solution is None:
            raise StructuralException(
                "Component with {} vertices and {} edges matches no score-2 "
                "shape".format(comp.n, comp.m)
            )
    logger.debug("score-2 component n={} c={}: {}".format(comp.n, c, solution))
    if memo is not None:
        memo[key] = solution
    return solution


def component_edges_to_root(comp, solution):
    """Solution edges translated through comp's labels."""
    return [norm_edge(comp.labels[u], comp.labels[v]) for u, v in solution.edges]
