__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Families of equal-sized cliques and their conversion to and from vertex
split sequences.

A family is either a partition (every edge of the graph lies in exactly one
part) or a cover (every edge lies in at least one part).  With freq(v) the
number of parts containing v:

    cost   = sum over v of max(0, freq(v) - 1)
    weight = sum over v of freq(v)

A partition of cost t turns into exactly t exclusive splits, and a cover of
weight |V| + t into t inclusive splits, and back again.
"""

import logging

from UCluster.Graph import (
    Graph, bits, to_mask, to_tuple, popcount, clique_masks
)
from UCluster._Instance import (
    SplitStep, EXCLUSIVE, INCLUSIVE, apply_split, split_lineage
)
from UCluster._Exceptions import InputException

logger = logging.getLogger(__name__)

PARTITION = "partition"
COVER = "cover"


class CliqueFamily(object):
    """An ordered list of vertex sets, each inducing a clique."""

    __slots__ = ("parts", "kind")

    def __init__(self, parts, kind):
        if kind not in (PARTITION, COVER):
            raise InputException("Unknown family kind: {}".format(kind))
        self.parts = tuple(tuple(sorted(p)) for p in parts)
        self.kind = kind

    @property
    def clique_size(self):
        return len(self.parts[0]) if self.parts else 0

    def frequencies(self, n):
        freq = [0] * n
        for part in self.parts:
            for v in part:
                freq[v] += 1
        return freq

    def cost(self):
        freq = {}
        for part in self.parts:
            for v in part:
                freq[v] = freq.get(v, 0) + 1
        return sum(f - 1 for f in freq.values())

    def weight(self):
        return sum(len(p) for p in self.parts)

    def map_vertices(self, mapping):
        """Family with every vertex v replaced by mapping[v]."""
        return CliqueFamily(
            [[mapping[v] for v in p] for p in self.parts], self.kind
        )

    def validate(self, g):
        """Raise InputException unless this is a valid uniform family of g."""
        sizes = set(len(p) for p in self.parts)
        if len(sizes) > 1:
            raise InputException("Parts of unequal size: {}".format(sorted(sizes)))
        covered = [0] * g.n
        for i, part in enumerate(self.parts):
            mask = to_mask(part)
            if any(not (0 <= v < g.n) for v in part) or popcount(mask) != len(part):
                raise InputException("Part {} is not a vertex set of g".format(i))
            if not g.is_clique(mask):
                raise InputException("Part {} is not a clique".format(i))
            for v in part:
                other = mask & ~(1 << v)
                if self.kind == PARTITION and covered[v] & other:
                    raise InputException(
                        "Part {} shares an edge at vertex {} with an earlier "
                        "part".format(i, v)
                    )
                covered[v] |= other
        for v in range(g.n):
            if covered[v] != g.adj(v):
                raise InputException(
                    "Edges at vertex {} are not covered by the family".format(v)
                )

    def __eq__(self, other):
        return (isinstance(other, CliqueFamily) and self.kind == other.kind
                and sorted(self.parts) == sorted(other.parts))

    def __repr__(self):
        return "CliqueFamily({}, parts={})".format(self.kind, list(self.parts))


def _check_extractable(g, fam, kind):
    if fam.kind != kind:
        raise InputException("Expected a {} family, got {}".format(kind, fam.kind))
    fam.validate(g)
    if g.m > 0 and any(a == 0 for a in g.adjacency):
        raise InputException("Graph has an isolated vertex next to edges")


def _extract(g, fam, mode):
    # the family is rewritten in the ids of the evolving graph
    adj = list(g.adjacency)
    parts = [to_mask(p) for p in fam.parts]
    steps = []
    while True:
        freq = {}
        for idx, part in enumerate(parts):
            for v in bits(part):
                freq.setdefault(v, []).append(idx)
        shared = sorted(v for v, idxs in freq.items() if len(idxs) > 1)
        if not shared:
            return steps
        u = shared[0]
        idxs = freq[u]
        first = parts[idxs[0]] & ~(1 << u)
        second = 0
        for idx in idxs[1:]:
            second |= parts[idx]
        second &= adj[u] & ~(1 << u)
        if mode == EXCLUSIVE:
            second = adj[u] & ~first
        step = SplitStep(u, to_tuple(first), to_tuple(second), mode)
        new = len(adj)
        apply_split(adj, len(steps), step)
        for idx in idxs[1:]:
            parts[idx] = (parts[idx] & ~(1 << u)) | (1 << new)
        steps.append(step)


def partition_to_splits(g, fam):
    """Exclusive split sequence of length fam.cost() turning g into the
    disjoint union of the parts.  The shared vertex keeps the neighbours in its
    first part; the copy takes all remaining neighbours and replaces it in
    every other part."""
    _check_extractable(g, fam, PARTITION)
    steps = _extract(g, fam, EXCLUSIVE)
    logger.debug("partition of cost {} gave {} splits".format(fam.cost(), len(steps)))
    return steps


def cover_to_splits(g, fam):
    """Inclusive split sequence of length fam.weight() - |V| turning g into
    the disjoint union of the parts.  u_in keeps N(u) inside its first clique,
    u_out takes the members of the other cliques containing u."""
    _check_extractable(g, fam, COVER)
    steps = _extract(g, fam, INCLUSIVE)
    logger.debug("cover of weight {} gave {} splits".format(fam.weight(), len(steps)))
    return steps


def splits_to_family(g, steps):
    """Family of g traced back from a split sequence whose result is a uniform
    cluster graph.  Exclusive sequences give partitions, any other sequence a
    cover."""
    adj = list(g.adjacency)
    for i, step in enumerate(steps):
        apply_split(adj, i, step)
    final = Graph.from_adjacency(adj)
    comps = clique_masks(final)
    if comps is None or len(set(popcount(c) for c in comps)) > 1:
        raise InputException(
            "Split sequence does not end in a uniform cluster graph"
        )
    origin = split_lineage(g, steps)
    kind = PARTITION if all(s.mode == EXCLUSIVE for s in steps) else COVER
    parts = [sorted(origin[x] for x in bits(comp)) for comp in comps]
    return CliqueFamily(parts, kind)
