__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Named small graphs used by the tests and the command-line examples.

Vertex ids follow the letters used when the graphs are drawn by hand, e.g.
the diamond has a=0, b=1, c=2, d=3 with edges ab, ac, bc, bd, cd.
"""

import itertools

from UCluster.Graph import Graph
from UCluster._Exceptions import InputException


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, itertools.combinations(range(n), 2))


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs):
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


def join(g, h):
    """Every vertex of g joined to every vertex of h."""
    union = disjoint_union(g, h)
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return union.add_edges(cross)


_NAMED = {
    "p3": lambda: path(3),
    "p4": lambda: path(4),
    "p5": lambda: path(5),
    "c4": lambda: cycle(4),
    "c5": lambda: cycle(5),
    "c6": lambda: cycle(6),
    "k3": lambda: complete(3),
    "k4": lambda: complete(4),
    "k5": lambda: complete(5),
    "star": lambda: star(4),
    "claw": lambda: star(3),
    "diamond": lambda: Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "paw": lambda: Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
    "bowtie": lambda: Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4),
                                (3, 4)]),
    "two-k3-bridge": lambda: Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3),
                                       (3, 4), (3, 5), (4, 5)]),
    "p3-two-k3": lambda: disjoint_union(path(3), complete(3), complete(3)),
    "two-k5-bridge": lambda: disjoint_union(complete(5), complete(5)).add_edges(
        [(0, 5)]
    ),
    # the six-vertex score-2 shapes
    "3-asterisk": lambda: Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4),
                                    (2, 5)]),
    "3-sun": lambda: Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3),
                               (1, 4), (2, 4), (0, 5), (2, 5)]),
    # P4 a-b-c-d with b and c doubled into b' and c'
    "fat-p4": lambda: Graph(6, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 1),
                                (4, 2), (1, 5), (4, 5), (5, 2), (5, 3)]),
    # P5 a-b-c-d-e with c doubled into c'
    "fat-p5": lambda: Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5),
                                (5, 2), (5, 3)]),
}


def names():
    return sorted(_NAMED)


def named_graph(name):
    """The graph registered under name."""
    try:
        return _NAMED[name]()
    except KeyError:
        raise InputException(
            "Unknown graph name: {}. Expected one of {}".format(
                name, ", ".join(names())
            )
        )
