__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Seeded instance generators for tests and benchmarks.

Both generators draw from numpy.random.Generator(PCG64(seed)), so a corpus is
reproduced exactly from its seeds:

generate_planted
    num_cliques disjoint cliques of clique_size on ids 0..n-1, clique i
    holding ids i*clique_size .. (i+1)*clique_size - 1.  add_count pairs are
    drawn without replacement from the sorted list of absent pairs and added,
    then del_count edges are drawn without replacement from the sorted list
    of planted edges and deleted.

random_graph
    every pair (u, v), u < v, in sorted order, is kept when the next uniform
    draw is below p.
"""

import itertools

from numpy.random import Generator, PCG64

from UCluster.Graph import Graph
from UCluster._Exceptions import GenerationException


def rng_for(seed):
    return Generator(PCG64(seed))


def planted_cliques(num_cliques, clique_size):
    """num_cliques disjoint cliques of clique_size, before any perturbation."""
    edges = []
    for i in range(num_cliques):
        block = range(i * clique_size, (i + 1) * clique_size)
        edges.extend(itertools.combinations(block, 2))
    return Graph(num_cliques * clique_size, edges)


def generate_planted(num_cliques, clique_size, add_count=0, del_count=0,
                     seed=0):
    """Planted uniform cluster graph perturbed by add_count added and
    del_count deleted edges."""
    for name, value in (("num_cliques", num_cliques),
                        ("clique_size", clique_size),
                        ("add_count", add_count), ("del_count", del_count)):
        if value < 0:
            raise GenerationException(
                "{} must be non-negative, got {}".format(name, value)
            )
    g = planted_cliques(num_cliques, clique_size)
    absent = g.non_edges()
    present = g.edges()
    if add_count > len(absent):
        raise GenerationException(
            "Cannot add {} edges, only {} pairs are absent".format(
                add_count, len(absent)
            )
        )
    if del_count > len(present):
        raise GenerationException(
            "Cannot delete {} edges, only {} are planted".format(
                del_count, len(present)
            )
        )
    rng = rng_for(seed)
    added = [absent[i] for i in rng.choice(len(absent), size=add_count,
                                           replace=False)]
    deleted = [present[i] for i in rng.choice(len(present), size=del_count,
                                              replace=False)]
    return g.add_edges(added).remove_edges(deleted)


def random_graph(n, p, seed=0):
    """Erdos-Renyi style graph on n vertices with edge probability p."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GenerationException(
            "Need n >= 0 and 0 <= p <= 1, got n={} p={}".format(n, p)
        )
    pairs = list(itertools.combinations(range(n), 2))
    draws = rng_for(seed).random(len(pairs))
    return Graph(n, [e for e, x in zip(pairs, draws) if x < p])


def random_corpus(count, max_n, seed=0, min_n=1):
    """count random graphs with n drawn from min_n..max_n and the density
    swept over (0, 1); graph i uses seed + i."""
    out = []
    for i in range(count):
        rng = rng_for(seed + i)
        n = int(rng.integers(min_n, max_n + 1))
        p = float(rng.uniform(0.1, 0.9))
        out.append(random_graph(n, p, seed=seed + i))
    return out
