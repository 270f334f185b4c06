__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Brute-force d-way cut: the smallest edge set whose removal leaves exactly
d connected components.  Vertices are assigned to classes in id order (a
restricted growth string), the cut is counted incrementally and the search
is pruned against the budget and the best cut so far."""

import logging

from UCluster.Graph import bits, popcount, to_tuple
from UCluster._Exceptions import InputException
from UCluster.Oracle._Oracle import _guard, _Counter

logger = logging.getLogger(__name__)


def oracle_dway_cut(g, d, budget, override=False, token=None, limit=None):
    """Return (cut_edges, parts) for a minimum d-way cut of size <= budget,
    or None.  Parts are sorted vertex tuples in order of smallest member."""
    if d < 1 or d > g.n:
        raise InputException(
            "Cannot cut {} vertices into {} components".format(g.n, d)
        )
    _guard("dway_max_vertices", g.n, override, limit)
    counter = _Counter(token)
    best = [budget + 1, None]
    classes = []

    def search(v, assigned, cut):
        counter.tick()
        if cut >= best[0]:
            return
        if v == g.n:
            if len(classes) == d and all(
                len(g.component_masks(c)) == 1 for c in classes
            ):
                best[0] = cut
                best[1] = list(classes)
            return
        # enough vertices left to open the missing classes
        if g.n - v < d - len(classes):
            return
        row = g.adj(v) & assigned
        for i in range(len(classes)):
            inc = popcount(row & ~classes[i])
            classes[i] |= 1 << v
            search(v + 1, assigned | (1 << v), cut + inc)
            classes[i] &= ~(1 << v)
        if len(classes) < d:
            classes.append(1 << v)
            search(v + 1, assigned | (1 << v), cut + popcount(row))
            classes.pop()

    search(0, 0, 0)
    logger.debug("d-way cut (d={}) searched {} nodes".format(d, counter.nodes))
    if best[1] is None:
        return None
    class_of = {}
    for i, c in enumerate(best[1]):
        for v in bits(c):
            class_of[v] = i
    cut_edges = [e for e in g.edges() if class_of[e[0]] != class_of[e[1]]]
    return cut_edges, [to_tuple(c) for c in best[1]]


def clique_dway_cuts(g, d, budget, max_part=None, override=False, token=None,
                     limit=None):
    """Yield (cut_edges, parts) for every partition of V into exactly d
    cliques of at most max_part vertices whose crossing edges number at most
    budget.  Parts are sorted vertex tuples in order of smallest member; the
    partitions come in restricted-growth order, not by cost."""
    if d < 1 or d > g.n:
        raise InputException(
            "Cannot cut {} vertices into {} components".format(g.n, d)
        )
    _guard("dway_max_vertices", g.n, override, limit)
    if max_part is None:
        max_part = g.n
    counter = _Counter(token)
    classes = []

    def search(v, assigned, cut):
        counter.tick()
        if cut > budget:
            return
        if v == g.n:
            if len(classes) == d:
                yield list(classes)
            return
        if g.n - v < d - len(classes):
            return
        row = g.adj(v) & assigned
        for i in range(len(classes)):
            c = classes[i]
            if c & ~row or popcount(c) >= max_part:
                continue
            classes[i] |= 1 << v
            yield from search(v + 1, assigned | (1 << v),
                              cut + popcount(row & ~c))
            classes[i] &= ~(1 << v)
        if len(classes) < d:
            classes.append(1 << v)
            yield from search(v + 1, assigned | (1 << v), cut + popcount(row))
            classes.pop()

    for found in search(0, 0, 0):
        class_of = {}
        for i, c in enumerate(found):
            for v in bits(c):
                class_of[v] = i
        cut_edges = [e for e in g.edges() if class_of[e[0]] != class_of[e[1]]]
        yield cut_edges, [to_tuple(c) for c in found]
