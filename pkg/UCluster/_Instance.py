__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Problem instances, witnesses and the application of a witness to a graph.

A witness is the certificate for a YES answer.  Its payload depends on the
variant:

    ucvd            vertices to delete
    uced            edges to delete
    ucea            vertex pairs to add as edges
    ucee            vertex pairs to toggle (symmetric difference)
    ucevs / ucivs   an ordered sequence of split steps

A split step replaces vertex v by two copies.  The first copy keeps the id v
and the neighbour set `first`; the second copy is appended with the next free
id and gets the neighbour set `second`.  Ids used by later steps refer to the
graph as it is after the earlier steps.
"""

import logging
from collections import namedtuple

from UCluster.Graph import Graph, bits, to_mask, norm_edge, is_uniform_cluster
from UCluster._Exceptions import (
    APIException, InputException, WitnessException
)

logger = logging.getLogger(__name__)

INCLUSIVE = "inclusive"
EXCLUSIVE = "exclusive"

VariantInfo = namedtuple(
    "VariantInfo", ["name", "title", "kind", "mode", "fpt"]
)

VARIANTS = {
    "ucvd": VariantInfo("ucvd", "Uniform Cluster Vertex Deletion",
                        "vertex", "delete", True),
    "uced": VariantInfo("uced", "Uniform Cluster Edge Deletion",
                        "edge", "delete", True),
    "ucea": VariantInfo("ucea", "Uniform Cluster Edge Addition",
                        "edge", "add", False),
    "ucee": VariantInfo("ucee", "Uniform Cluster Edge Editing",
                        "edge", "edit", False),
    "ucevs": VariantInfo("ucevs", "Uniform Cluster Exclusive Vertex Splitting",
                         "split", EXCLUSIVE, False),
    "ucivs": VariantInfo("ucivs", "Uniform Cluster Inclusive Vertex Splitting",
                         "split", INCLUSIVE, False),
}

EDGE_MODES = {"uced": "delete", "ucea": "add", "ucee": "edit"}


def check_variant(variant):
    if variant not in VARIANTS:
        raise APIException(
            "Unknown variant: {}. Expected one of {}".format(
                variant, ", ".join(sorted(VARIANTS))
            )
        )
    return VARIANTS[variant]


class Instance(object):
    """A graph, a budget k and the variant the budget is spent on."""

    __slots__ = ("graph", "k", "variant")

    def __init__(self, graph, k, variant):
        check_variant(variant)
        if k < 0:
            raise InputException("Budget k must be non-negative, got {}".format(k))
        self.graph = graph
        self.k = int(k)
        self.variant = variant

    def with_graph(self, graph, k):
        return Instance(graph, k, self.variant)

    def __repr__(self):
        return "Instance({}, n={}, m={}, k={})".format(
            self.variant, self.graph.n, self.graph.m, self.k
        )


class SplitStep(namedtuple("SplitStep", ["vertex", "first", "second", "mode"])):
    """One vertex split.  first/second are sorted tuples of neighbour ids in
    the graph the step is applied to."""
    __slots__ = ()

    def __new__(cls, vertex, first, second, mode=INCLUSIVE):
        if mode not in (INCLUSIVE, EXCLUSIVE):
            raise InputException("Unknown split mode: {}".format(mode))
        return super().__new__(
            cls, vertex, tuple(sorted(first)), tuple(sorted(second)), mode
        )


class Witness(object):
    """Variant-tagged certificate.  `items` holds vertex ids, (u, v) pairs or
    SplitSteps depending on the variant."""

    __slots__ = ("variant", "items")

    def __init__(self, variant, items):
        info = check_variant(variant)
        if info.kind == "vertex":
            items = tuple(sorted(items))
        elif info.kind == "edge":
            items = tuple(sorted(norm_edge(u, v) for (u, v) in items))
        else:
            items = tuple(items)
        self.variant = variant
        self.items = items

    @property
    def size(self):
        return len(self.items)

    def __len__(self):
        return len(self.items)

    def __eq__(self, other):
        return (isinstance(other, Witness) and self.variant == other.variant
                and self.items == other.items)

    def __repr__(self):
        return "Witness({}, size={})".format(self.variant, self.size)


def _apply_vertices(g, items):
    seen = set()
    for i, v in enumerate(items):
        if not (0 <= v < g.n):
            raise WitnessException(i, "vertex {} out of range".format(v))
        if v in seen:
            raise WitnessException(i, "vertex {} listed twice".format(v))
        seen.add(v)
    return g.remove_vertices(items)


def _check_pairs(g, items):
    seen = set()
    for i, (u, v) in enumerate(items):
        if u == v or not (0 <= u < g.n and 0 <= v < g.n):
            raise WitnessException(i, "invalid pair ({}, {})".format(u, v))
        e = norm_edge(u, v)
        if e in seen:
            raise WitnessException(i, "pair ({}, {}) listed twice".format(u, v))
        seen.add(e)


def _apply_edges(g, items, mode):
    _check_pairs(g, items)
    for i, (u, v) in enumerate(items):
        if mode == "delete" and not g.has_edge(u, v):
            raise WitnessException(i, "edge ({}, {}) is absent".format(u, v))
        if mode == "add" and g.has_edge(u, v):
            raise WitnessException(i, "edge ({}, {}) already present".format(u, v))
    return g.toggle_edges(items)


def apply_split(adj, i, step):
    """Apply one split to a mutable adjacency list in place.  i is the step
    index reported in errors.

    Of the two copies of v, the one carrying step.first keeps the id v and
    the one carrying step.second gets the next free id len(adj).  A sequence
    of s splits on n vertices therefore ends with ids 0..n+s-1, the new ones
    numbered n, n+1, ... in step order.
    """
    v = step.vertex
    if not (0 <= v < len(adj)):
        raise WitnessException(i, "vertex {} out of range".format(v))
    first = to_mask(step.first)
    second = to_mask(step.second)
    if (first | second) & ~adj[v]:
        raise WitnessException(
            i, "neighbour sets of vertex {} are not subsets of N(v)".format(v)
        )
    if first | second != adj[v]:
        raise WitnessException(
            i, "neighbour sets of vertex {} do not cover N(v)".format(v)
        )
    if step.mode == EXCLUSIVE and first & second:
        raise WitnessException(
            i, "exclusive split of vertex {} has overlapping sets".format(v)
        )
    new = len(adj)
    for u in bits(adj[v] & ~first):
        adj[u] &= ~(1 << v)
    adj[v] = first
    adj.append(second)
    for u in bits(second):
        adj[u] |= 1 << new


def _apply_splits(g, items, mode):
    adj = list(g.adjacency)
    for i, step in enumerate(items):
        if mode == EXCLUSIVE and step.mode != EXCLUSIVE:
            raise WitnessException(i, "inclusive step in an exclusive witness")
        apply_split(adj, i, step)
    return Graph.from_adjacency(adj)


def apply_witness(g, w):
    """Return the graph obtained from g by applying the witness w."""
    info = check_variant(w.variant)
    if info.kind == "vertex":
        return _apply_vertices(g, w.items)
    if info.kind == "edge":
        return _apply_edges(g, w.items, info.mode)
    return _apply_splits(g, w.items, info.mode)


def split_lineage(g, steps):
    """origin[x] is the vertex of g that final vertex x descends from."""
    origin = list(range(g.n))
    for step in steps:
        origin.append(origin[step.vertex])
    return origin


def verify_witness(instance, w):
    """Check that w certifies instance; return the final clique size."""
    if w.variant != instance.variant:
        raise WitnessException(
            0, "witness variant {} does not match instance variant {}".format(
                w.variant, instance.variant
            )
        )
    if w.size > instance.k:
        raise WitnessException(
            w.size, "witness size {} exceeds k = {}".format(w.size, instance.k)
        )
    result = apply_witness(instance.graph, w)
    c = is_uniform_cluster(result)
    if c is None:
        raise WitnessException(
            w.size, "result is not a uniform cluster graph"
        )
    return c
