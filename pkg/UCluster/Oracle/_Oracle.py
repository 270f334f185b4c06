__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Brute-force exact solvers for the six variants.  They are the ground truth
for the test suite and for finishing small kernels, and are guarded by size
limits from the configuration: exceeding a guard raises CapacityException
unless override=True is passed.

The edge oracle enumerates partitions of V into equal blocks rather than
subsets of edges: for a fixed partition the cheapest edit set is determined
(delete every crossing edge, add every missing pair inside a block), so the
minimum over partitions is the minimum over edge sets.
"""

import itertools
import logging
from collections import namedtuple

from UCluster.Graph import (
    bits, lowest, popcount, to_mask, to_tuple, norm_edge, is_uniform_cluster
)
from UCluster._Instance import Witness
from UCluster._Exceptions import CapacityException, InputException
from UCluster.Kernels._CliqueFamily import (
    CliqueFamily, PARTITION, COVER, partition_to_splits, cover_to_splits
)
from UCluster.Managers import get_config, check_token

logger = logging.getLogger(__name__)

OracleAnswer = namedtuple(
    "OracleAnswer", ["decision", "witness", "optimum", "family"]
)
OracleAnswer.__new__.__defaults__ = (None, None, None)

# poll the cancellation token every this many search nodes
POLL_INTERVAL = 512

EDGE_VARIANTS = {"delete": "uced", "add": "ucea", "edit": "ucee"}


def _guard(name, size, override, limit=None):
    if limit is None:
        limit = get_config().guard(name)
    if size > limit and not override:
        raise CapacityException(name, size, limit)


class _Counter(object):
    """Node counter that polls a cancellation token."""

    def __init__(self, token):
        self.token = token
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes % POLL_INTERVAL == 0:
            check_token(self.token)


def _no(optimum=None):
    return OracleAnswer(False, None, optimum, None)


# vertex deletion
def oracle_ucvd(g, k, override=False, token=None, limit=None):
    """Smallest vertex set of size <= k whose deletion leaves a uniform
    cluster graph."""
    _guard("ucvd_max_vertices", g.n, override, limit)
    counter = _Counter(token)
    full = g.all_mask
    for size in range(0, min(k, g.n) + 1):
        for combo in itertools.combinations(range(g.n), size):
            counter.tick()
            if is_uniform_cluster(g, full & ~to_mask(combo)) is not None:
                return OracleAnswer(True, Witness("ucvd", combo), size)
    return _no()


# edge deletion / addition / editing
def _block_cost(g, block, rest, mode):
    inside = 0
    cross = 0
    for v in bits(block):
        inside += popcount(g.adj(v) & block)
        cross += popcount(g.adj(v) & rest & ~block)
    inside //= 2
    size = popcount(block)
    missing = size * (size - 1) // 2 - inside
    if mode == "delete":
        return None if missing else cross
    if mode == "add":
        return None if cross else missing
    return missing + cross


def _equal_partition_search(g, c, mode, bound, counter):
    """Cheapest partition of V into blocks of size c with cost <= bound."""
    best = [bound + 1, None]
    blocks = []

    def search(rest, cost):
        counter.tick()
        if cost >= best[0]:
            return
        if not rest:
            best[0] = cost
            best[1] = list(blocks)
            return
        v = lowest(rest)
        pool = rest & ~(1 << v)
        if mode == "delete":
            pool &= g.adj(v)
        for combo in itertools.combinations(tuple(bits(pool)), c - 1):
            block = (1 << v) | to_mask(combo)
            inc = _block_cost(g, block, rest, mode)
            if inc is None or cost + inc >= best[0]:
                continue
            blocks.append(block)
            search(rest & ~block, cost + inc)
            blocks.pop()

    search(g.all_mask, 0)
    return best


def edits_for_blocks(g, blocks, mode):
    block_of = {}
    for i, b in enumerate(blocks):
        for v in bits(b):
            block_of[v] = i
    edits = []
    if mode in ("delete", "edit"):
        edits.extend(e for e in g.edges() if block_of[e[0]] != block_of[e[1]])
    if mode in ("add", "edit"):
        edits.extend(e for e in g.non_edges() if block_of[e[0]] == block_of[e[1]])
    return sorted(edits)


def cheapest_equal_partition(g, c, mode, bound, token=None):
    """Cheapest partition of V into cliques of size c under mode, as
    (cost, blocks) with cost <= bound, or None.  Not guarded."""
    if mode not in EDGE_VARIANTS:
        raise InputException("Unknown edge mode: {}".format(mode))
    if g.n % c:
        return None
    cost, blocks = _equal_partition_search(g, c, mode, bound, _Counter(token))
    if blocks is None:
        return None
    return cost, blocks


def oracle_edge(g, k, mode, override=False, token=None, limit=None):
    """Minimum number of edge deletions / additions / edits (mode) turning g
    into a uniform cluster graph, if at most k."""
    if mode not in EDGE_VARIANTS:
        raise InputException("Unknown edge mode: {}".format(mode))
    _guard("edge_max_vertices", g.n, override, limit)
    variant = EDGE_VARIANTS[mode]
    if g.n == 0:
        return OracleAnswer(True, Witness(variant, ()), 0)
    counter = _Counter(token)
    best_cost = k + 1
    best_blocks = None
    for c in range(1, g.n + 1):
        if g.n % c:
            continue
        cost, blocks = _equal_partition_search(g, c, mode, best_cost - 1, counter)
        if blocks is not None and cost < best_cost:
            best_cost, best_blocks = cost, blocks
    logger.debug("edge oracle ({}) searched {} nodes".format(mode, counter.nodes))
    if best_blocks is None:
        return _no()
    edits = edits_for_blocks(g, best_blocks, mode)
    return OracleAnswer(True, Witness(variant, edits), len(edits))


# vertex splitting
def _cliques_within(adj, cand, size):
    """All cliques of the given size inside cand, as masks, ascending."""
    if size == 0:
        yield 0
        return
    for v in bits(cand):
        higher = cand & ~((1 << (v + 1)) - 1)
        for rest in _cliques_within(adj, higher & adj[v], size - 1):
            yield (1 << v) | rest


def _first_uncovered(unc):
    for u, row in enumerate(unc):
        if row:
            return u, lowest(row)
    return None


def _partition_search(g, d, bound, counter):
    """Cheapest partition of E into d-cliques with cost <= bound."""
    unc = list(g.adjacency)
    freq = [0] * g.n
    best = [bound + 1, None]
    parts = []

    def search(cost):
        counter.tick()
        if cost >= best[0]:
            return
        edge = _first_uncovered(unc)
        if edge is None:
            best[0] = cost
            best[1] = list(parts)
            return
        u, v = edge
        for extra in _cliques_within(unc, unc[u] & unc[v], d - 2):
            clique = extra | (1 << u) | (1 << v)
            inc = sum(1 for x in bits(clique) if freq[x])
            if cost + inc >= best[0]:
                continue
            for x in bits(clique):
                unc[x] &= ~clique
                freq[x] += 1
            parts.append(clique)
            search(cost + inc)
            parts.pop()
            for x in bits(clique):
                unc[x] |= clique & ~(1 << x)
                freq[x] -= 1

    search(0)
    return best


def _cover_search(g, d, bound, counter):
    """Smallest cover of E by d-cliques with weight - |V| <= bound."""
    adj = g.adjacency
    unc = list(adj)
    pairs = d * (d - 1) // 2
    best = [bound + 1, None]
    parts = []

    def search(remaining):
        counter.tick()
        needed = len(parts) + (remaining + pairs - 1) // pairs
        if needed * d - g.n >= best[0]:
            return
        edge = _first_uncovered(unc)
        if edge is None:
            best[0] = len(parts) * d - g.n
            best[1] = list(parts)
            return
        u, v = edge
        for extra in _cliques_within(adj, adj[u] & adj[v], d - 2):
            clique = extra | (1 << u) | (1 << v)
            removed = []
            for x in bits(clique):
                removed.append((x, unc[x] & clique))
                unc[x] &= ~clique
            newly = sum(popcount(r) for _, r in removed) // 2
            parts.append(clique)
            search(remaining - newly)
            parts.pop()
            for x, r in removed:
                unc[x] |= r

    search(g.m)
    return best


def _split_trivial(g, variant):
    # clique size 1: splits never remove edges
    if g.m == 0:
        kind = PARTITION if variant == "ucevs" else COVER
        return OracleAnswer(True, Witness(variant, ()), 0, CliqueFamily([], kind))
    if any(a == 0 for a in g.adjacency):
        return _no()
    return None


def oracle_ucevs(g, k, override=False, token=None, limit=None):
    """Minimum number of exclusive splits, via the cheapest K_d edge
    partition over all clique sizes d."""
    _guard("ucevs_max_edges", g.m, override, limit)
    trivial = _split_trivial(g, "ucevs")
    if trivial is not None:
        return trivial
    counter = _Counter(token)
    best_cost = k + 1
    best_parts = None
    top = max(g.degrees()) + 1
    for d in range(2, top + 1):
        if g.m % (d * (d - 1) // 2):
            continue
        cost, parts = _partition_search(g, d, best_cost - 1, counter)
        if parts is not None and cost < best_cost:
            best_cost, best_parts = cost, parts
    logger.debug("ucevs oracle searched {} nodes".format(counter.nodes))
    if best_parts is None:
        return _no()
    fam = CliqueFamily([to_tuple(p) for p in best_parts], PARTITION)
    steps = partition_to_splits(g, fam)
    return OracleAnswer(True, Witness("ucevs", steps), best_cost, fam)


def oracle_ucivs(g, k, override=False, token=None, limit=None):
    """Minimum number of inclusive splits, via the lightest cover of E by
    equal-size cliques."""
    _guard("ucivs_max_vertices", g.n, override, limit)
    trivial = _split_trivial(g, "ucivs")
    if trivial is not None:
        return trivial
    counter = _Counter(token)
    best_cost = k + 1
    best_parts = None
    top = max(g.degrees()) + 1
    for d in range(2, top + 1):
        cost, parts = _cover_search(g, d, best_cost - 1, counter)
        if parts is not None and cost < best_cost:
            best_cost, best_parts = cost, parts
    logger.debug("ucivs oracle searched {} nodes".format(counter.nodes))
    if best_parts is None:
        return _no()
    fam = CliqueFamily([to_tuple(p) for p in best_parts], COVER)
    steps = cover_to_splits(g, fam)
    return OracleAnswer(True, Witness("ucivs", steps), best_cost, fam)


def oracle(variant, g, k, **kwargs):
    """Dispatch to the oracle of a variant."""
    if variant == "ucvd":
        return oracle_ucvd(g, k, **kwargs)
    if variant == "ucevs":
        return oracle_ucevs(g, k, **kwargs)
    if variant == "ucivs":
        return oracle_ucivs(g, k, **kwargs)
    for mode, name in EDGE_VARIANTS.items():
        if name == variant:
            return oracle_edge(g, k, mode, **kwargs)
    raise InputException("Unknown variant: {}".format(variant))


def edge_witness_pairs(g, answer):
    """Edit pairs of an edge-oracle answer in root ids."""
    return sorted(norm_edge(g.labels[u], g.labels[v]) for u, v in answer.witness.items)
