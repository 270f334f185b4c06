__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Immutable simple undirected graph and the structural primitives that every
kernel and solver in UCluster consumes.

Vertices are the dense integer ids 0..n-1.  Adjacency is held as one Python
int per vertex, used as a bitset: bit u of adjacency[v] is set iff uv is an
edge.  Sets of vertices are passed around internally as the same kind of int
bitmask; the public operations return sorted tuples.

Every graph also carries a `labels` tuple mapping its ids to the ids of the
graph it was derived from (the root graph), so that kernels can shrink a graph
and still report removed vertices and edges in the ids of the input.
"""

import logging

from UCluster._Exceptions import InputException

logger = logging.getLogger(__name__)


def popcount(mask):
    return bin(mask).count("1")


def bits(mask):
    """Iterate the set bits of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask):
    """Lowest set bit of a non-zero mask."""
    return (mask & -mask).bit_length() - 1


def to_mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_tuple(mask):
    return tuple(bits(mask))


def norm_edge(u, v):
    return (u, v) if u < v else (v, u)


class Graph(object):
    """Immutable simple undirected graph with bitset adjacency."""

    __slots__ = ("_n", "_adj", "_m", "_labels")

    def __init__(self, n, edges=(), labels=None):
        if n < 0:
            raise InputException("Vertex count cannot be negative: {}".format(n))
        adj = [0] * n
        for (u, v) in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputException(
                    "Edge ({}, {}) outside vertex range 0..{}".format(u, v, n-1)
                )
            if u == v:
                raise InputException("Self-loop on vertex {}".format(u))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._init_from(adj, labels)

    def _init_from(self, adj, labels):
        self._n = len(adj)
        self._adj = tuple(adj)
        self._m = sum(popcount(a) for a in adj) // 2
        if labels is None:
            self._labels = tuple(range(self._n))
        else:
            if len(labels) != self._n:
                raise InputException(
                    "Label count {} does not match vertex count {}".format(
                        len(labels), self._n
                    )
                )
            self._labels = tuple(labels)

    @classmethod
    def from_adjacency(cls, adj, labels=None):
        """Build a graph straight from a list of bitmasks.  The masks must be
        symmetric and loop-free; this is the fast path used by the algorithms
        and is not re-validated."""
        g = cls.__new__(cls)
        g._init_from(list(adj), labels)
        return g

    @classmethod
    def from_networkx(cls, nx_graph):
        """Convert a networkx graph, numbering its nodes in sorted order."""
        nodes = sorted(nx_graph.nodes())
        index = {x: i for i, x in enumerate(nodes)}
        return cls(len(nodes), [(index[a], index[b]) for a, b in nx_graph.edges()])

    def to_networkx(self):
        import networkx
        nx_graph = networkx.Graph()
        nx_graph.add_nodes_from(range(self._n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    # basic queries
    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    @property
    def labels(self):
        return self._labels

    @property
    def adjacency(self):
        return self._adj

    @property
    def all_mask(self):
        return (1 << self._n) - 1

    def adj(self, v):
        return self._adj[v]

    def closed(self, v):
        return self._adj[v] | (1 << v)

    def neighbours(self, v):
        return to_tuple(self._adj[v])

    def degree(self, v):
        return popcount(self._adj[v])

    def degrees(self):
        return [popcount(a) for a in self._adj]

    def has_edge(self, u, v):
        return u != v and bool(self._adj[u] >> v & 1)

    def edges(self):
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self._n):
            for v in bits(self._adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def non_edges(self):
        """All absent vertex pairs, sorted."""
        out = []
        full = self.all_mask
        for u in range(self._n):
            missing = (full & ~self._adj[u]) >> (u + 1)
            for v in bits(missing):
                out.append((u, u + 1 + v))
        return out

    def is_clique(self, mask):
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self._adj[v]:
                return False
        return True

    def component_masks(self, alive=None):
        """Connected components of the subgraph induced by alive, as bitmasks
        ordered by their smallest vertex."""
        if alive is None:
            alive = self.all_mask
        comps = []
        rest = alive
        while rest:
            frontier = rest & -rest
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for v in bits(frontier):
                    nxt |= self._adj[v]
                frontier = nxt & alive & ~comp
            comps.append(comp)
            rest &= ~comp
        return comps

    # derived graphs
    def induced(self, vertices):
        """Subgraph induced by vertices (an iterable or a bitmask), renumbered
        0..len-1 in ascending order.  Labels follow the kept vertices."""
        mask = vertices if isinstance(vertices, int) else to_mask(vertices)
        keep = to_tuple(mask)
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            new = 0
            for u in bits(self._adj[v] & mask):
                new |= 1 << index[u]
            adj.append(new)
        return Graph.from_adjacency(adj, [self._labels[v] for v in keep])

    def remove_vertices(self, vertices):
        mask = vertices if isinstance(vertices, int) else to_mask(vertices)
        return self.induced(self.all_mask & ~mask)

    def remove_edges(self, edges):
        adj = list(self._adj)
        for (u, v) in edges:
            if not self.has_edge(u, v):
                raise InputException("Edge ({}, {}) not in graph".format(u, v))
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph.from_adjacency(adj, self._labels)

    def add_edges(self, edges):
        adj = list(self._adj)
        for (u, v) in edges:
            if u == v or not (0 <= u < self._n and 0 <= v < self._n):
                raise InputException("Cannot add pair ({}, {})".format(u, v))
            if self.has_edge(u, v):
                raise InputException("Edge ({}, {}) already in graph".format(u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph.from_adjacency(adj, self._labels)

    def toggle_edges(self, pairs):
        """Symmetric difference with a set of vertex pairs."""
        adj = list(self._adj)
        for (u, v) in pairs:
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
        return Graph.from_adjacency(adj, self._labels)

    def relabel(self, labels):
        return Graph.from_adjacency(self._adj, labels)

    def root_edge(self, e):
        """Translate an edge in this graph's ids to root ids."""
        return norm_edge(self._labels[e[0]], self._labels[e[1]])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return "Graph(n={}, m={})".format(self._n, self._m)


def _first_p3(g, alive):
    # lexicographically smallest ordered (a, b, c) inside alive
    adj = g.adjacency
    for a in bits(alive):
        for b in bits(adj[a] & alive):
            rest = adj[b] & alive & ~adj[a] & ~(1 << a)
            if rest:
                return (a, b, lowest(rest))
    return None


def find_induced_p3(g, alive=None):
    """Return an induced P3 (a, b, c) with ab, bc in E and ac not in E, or
    None when g (restricted to alive) is a cluster graph.  The triple
    returned is the lexicographically smallest one."""
    return _first_p3(g, g.all_mask if alive is None else alive)


def maximal_p3_packing(g, alive=None):
    """Greedy maximal packing of vertex-disjoint induced P3s, scanning in
    ascending id order."""
    if alive is None:
        alive = g.all_mask
    packing = []
    while True:
        p3 = _first_p3(g, alive)
        if p3 is None:
            return packing
        packing.append(p3)
        alive &= ~to_mask(p3)


def clique_masks(g, alive=None):
    """Components of g[alive] as bitmasks if every one is a clique, else
    None."""
    comps = g.component_masks(alive)
    for comp in comps:
        if not g.is_clique(comp):
            return None
    return comps


def cluster_components(g):
    """The components of g as sorted vertex tuples when g is a cluster graph,
    None otherwise."""
    comps = clique_masks(g)
    if comps is None:
        return None
    return [to_tuple(c) for c in comps]


def is_cluster(g, alive=None):
    return clique_masks(g, alive) is not None


def is_uniform_cluster(g, alive=None):
    """Clique size c if g (restricted to alive) is a disjoint union of
    c-cliques, 0 for the empty graph, None otherwise."""
    comps = clique_masks(g, alive)
    if comps is None:
        return None
    if not comps:
        return 0
    size = popcount(comps[0])
    for comp in comps[1:]:
        if popcount(comp) != size:
            return None
    return size


def _check_edge(g, e):
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InputException("Edge ({}, {}) is not in the graph".format(u, v))


def edge_score(g, e):
    """Number of induced P3s containing the edge e."""
    _check_edge(g, e)
    u, v = e
    return popcount((g.adj(u) ^ g.adj(v)) & ~(1 << u) & ~(1 << v))


def companion_edges(g, e):
    """For every induced P3 through e, the other edge of that P3.  There is
    exactly one per P3, so len(companion_edges(g, e)) == edge_score(g, e)."""
    _check_edge(g, e)
    u, v = e
    out = []
    for w in bits((g.adj(u) ^ g.adj(v)) & ~(1 << u) & ~(1 << v)):
        if g.adj(u) >> w & 1:
            out.append(norm_edge(u, w))
        else:
            out.append(norm_edge(v, w))
    return sorted(out)


def max_edge_score(g):
    best = 0
    for e in g.edges():
        best = max(best, edge_score(g, e))
    return best


def find_induced_c4(g):
    """Return an induced 4-cycle (a, b, c, d) in cycle order, a smallest, or
    None."""
    adj = g.adjacency
    for a in range(g.n):
        for c in bits(g.all_mask & ~adj[a] & ~((1 << (a + 1)) - 1)):
            common = adj[a] & adj[c] & ~((1 << (a + 1)) - 1)
            for b in bits(common):
                rest = common & ~adj[b] & ~((1 << (b + 1)) - 1)
                if rest:
                    return (a, b, c, lowest(rest))
    return None


def are_true_twins(g, u, v):
    """True iff N[u] == N[v]."""
    return g.closed(u) == g.closed(v)


def twin_classes(g, vertices):
    """Partition vertices into true-twin classes, each a sorted tuple,
    ordered by smallest member."""
    classes = {}
    for v in sorted(vertices):
        classes.setdefault(g.closed(v), []).append(v)
    return sorted(tuple(c) for c in classes.values())
