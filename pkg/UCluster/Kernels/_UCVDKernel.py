__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Cubic vertex kernel for Uniform Cluster Vertex Deletion.

The kernel works on a maximal packing of vertex-disjoint induced P3s.  S is
the set of packed vertices, and G - S is a cluster graph whose cliques are
split into C0 (no neighbour in S) and C1 (some neighbour in S).

    +-------------------------------------------------+
    | CliquePartitionState                            |
    +-------------------------------------------------+
    | packing      list<(a, b, c)>                    |
    | S            mask                               |
    | cliques      list<mask>      cliques of G - S   |
    | c0, c1       list<int>       indices into above |
    | heavy        dict<s, int>    heavy clique of s  |
    | assigned     list<mask>      S_C per clique     |
    | boundary     list<mask>      N(C) per clique    |
    +-------------------------------------------------+

Rules, in the order they are tried (the list restarts after every change):

    UNIFORM   residual graph is a uniform cluster graph      -> yes
    BUDGET    k = 0 and not uniform                          -> no
    P3PACK    more than k P3s in the packing                 -> no
    UCVD1     s with neighbours in >= k+2 cliques, or >= k+1
              in one clique and > k elsewhere                -> delete s
    UCVD2     more than k+1 C0 cliques of one size           -> drop extras
    UCVD3     C0 cliques of more than k+1 distinct sizes     -> no
    CASE1     omega(C) < 8k                                  -> reduced
    UCVD3a    |C1| - |C2| > 4k                               -> delete C2
    UCVD4     s with no heavy clique                         -> delete s
    UCVD6     every C has |C - N(C)| > k+1                   -> drop one
                                                               twin per C
    UCVD7     (|L'| >= 2k+1) vertex of degree < d            -> delete it
    UCVD8     (|L'| >= 2k+1) L'-clique of size c with
              neighbours                                     -> delete them
    UCVD10    (|L'| >= 2k+1) more than k L'-cliques larger
              than c                                         -> no
    CASE2     nothing applies                                -> reduced

Every emitted instance has at most ucvd_bound(k) vertices, where

    ucvd_bound(k) = max(32k^3 + 40k^2 + 11k, 154k^3)

Case 1 is 3k + 8k(4k^2 + 5k + 1).  Case 2 adds up |S| <= 3k, the boundary
sets (15k^2), the twin parts of at most 3k heavy cliques and at most 2k+1
cliques of L', each bounded by the largest clique 15k^2 + 5k + 1, and the
twin parts of the remaining <= 4k^2 + 5k + 1 cliques, each at most k:

    3k + 15k^2 + (5k + 1)(15k^2 + 5k + 1) + k(4k^2 + 5k + 1)
      = 79k^3 + 60k^2 + 14k + 1 <= 154k^3     for k >= 1
"""

import logging

from UCluster.Graph import (
    bits, lowest, popcount, to_mask, to_tuple, maximal_p3_packing,
    clique_masks, is_uniform_cluster,
)
from UCluster._Instance import Instance
from UCluster._Exceptions import InputException
from UCluster.Kernels._KernelOutcome import (
    KernelContext, Firing, run_rules, YES, NO, REDUCE
)

logger = logging.getLogger(__name__)

CASE2_CONSTANT = 154


def ucvd_bound(k):
    return max(32 * k**3 + 40 * k**2 + 11 * k, CASE2_CONSTANT * k**3)


def heavy_threshold(size, k):
    return max(size - 4 * k, k + 1)


class CliquePartitionState(object):
    """Packing, cliques of G - S and the heavy-neighbour / boundary analysis
    for one (graph, k).  S can be given explicitly as a mask; otherwise it is
    the vertex set of the greedy maximal P3 packing."""

    def __init__(self, g, k, S=None):
        self.g = g
        self.k = k
        if S is None:
            self.packing = maximal_p3_packing(g)
            S = 0
            for p3 in self.packing:
                S |= to_mask(p3)
        else:
            self.packing = None
        self.S = S
        cliques = clique_masks(g, g.all_mask & ~S)
        if cliques is None:
            raise InputException("G - S is not a cluster graph")
        self.cliques = cliques
        adj = g.adjacency
        self.c0 = []
        self.c1 = []
        for i, C in enumerate(cliques):
            touched = 0
            for v in bits(C):
                touched |= adj[v]
            if touched & S:
                self.c1.append(i)
            else:
                self.c0.append(i)
        self.heavy = {}
        for s in bits(S):
            self.heavy[s] = self._heavy(s)
        self.assigned = [0] * len(cliques)
        for s, i in self.heavy.items():
            if i is not None:
                self.assigned[i] |= 1 << s
        self.boundary = [self._boundary(i) for i in range(len(cliques))]

    @property
    def omega(self):
        return max((popcount(C) for C in self.cliques), default=0)

    def hits(self, s, i):
        return popcount(self.g.adj(s) & self.cliques[i])

    def _heavy(self, s):
        for i, C in enumerate(self.cliques):
            if self.hits(s, i) >= heavy_threshold(popcount(C), self.k):
                return i
        return None

    def _boundary(self, i):
        C = self.cliques[i]
        adj = self.g.adjacency
        out = 0
        for s in bits(self.S):
            if self.assigned[i] >> s & 1:
                out |= C & ~adj[s]
            else:
                out |= adj[s] & C
        return out

    def twins(self, i):
        """C - N(C) as a mask."""
        return self.cliques[i] & ~self.boundary[i]


def heavy_neighbor_of(state, s):
    """Index of the heavy clique of s in state.cliques, or None."""
    return state.heavy.get(s)


def boundary_set(state, i):
    """N(C) for clique index i, as a sorted tuple."""
    return to_tuple(state.boundary[i])


def _state(ctx):
    if ctx.state is None:
        ctx.state = CliquePartitionState(ctx.graph, ctx.k)
    return ctx.state


# rules
def rule_uniform(ctx):
    if is_uniform_cluster(ctx.graph) is not None:
        return Firing("UNIFORM", decision=YES)
    return None


def rule_budget(ctx):
    if ctx.k == 0:
        return Firing("BUDGET", decision=NO)
    return None


def rule_packing(ctx):
    if len(_state(ctx).packing) > ctx.k:
        return Firing("P3PACK", decision=NO)
    return None


def rule_ucvd1(ctx):
    st = _state(ctx)
    k = ctx.k
    for s in bits(st.S):
        counts = [st.hits(s, i) for i in range(len(st.cliques))]
        touched = sum(1 for c in counts if c > 0)
        total = sum(counts)
        fire = touched >= k + 2
        if not fire:
            for c in counts:
                if c >= k + 1 and total - c > k:
                    fire = True
                    break
        if fire:
            return Firing("UCVD1", remove=1 << s, spend=1, forced=True)
    return None


def rule_ucvd2(ctx):
    st = _state(ctx)
    by_size = {}
    for i in st.c0:
        by_size.setdefault(popcount(st.cliques[i]), []).append(i)
    drop = 0
    for size in sorted(by_size):
        extra = by_size[size][ctx.k + 1:]
        for i in extra:
            drop |= st.cliques[i]
    if drop:
        return Firing("UCVD2", remove=drop)
    return None


def rule_ucvd3(ctx):
    st = _state(ctx)
    sizes = set(popcount(st.cliques[i]) for i in st.c0)
    if len(sizes) > ctx.k + 1:
        return Firing("UCVD3", decision=NO)
    return None


def rule_case1(ctx):
    if _state(ctx).omega < 8 * ctx.k:
        return Firing("CASE1", decision=REDUCE)
    return None


def rule_ucvd3a(ctx):
    st = _state(ctx)
    if not st.cliques:
        return None
    sizes = [popcount(C) for C in st.cliques]
    small = min(sizes)
    if max(sizes) - small > 4 * ctx.k:
        i = sizes.index(small)
        return Firing("UCVD3a", remove=st.cliques[i], spend=small, forced=True)
    return None


def rule_ucvd4(ctx):
    st = _state(ctx)
    for s in bits(st.S):
        if st.heavy[s] is None:
            return Firing("UCVD4", remove=1 << s, spend=1, forced=True)
    return None


def rule_ucvd6(ctx):
    st = _state(ctx)
    if not st.cliques:
        return None
    twins = [st.twins(i) for i in range(len(st.cliques))]
    if min(popcount(t) for t in twins) > ctx.k + 1:
        drop = 0
        for t in twins:
            drop |= 1 << lowest(t)
        return Firing("UCVD6", remove=drop)
    return None


def light_analysis(state):
    """(L', d) when |L'| >= 2k+1, where L' are the cliques heavy for no s
    with at least k+1 twins and d the degree shared by the twins of all but
    at most k of them.  Returns None when |L'| <= 2k and (L', None) when no
    degree value qualifies."""
    k = state.k
    heavy = set(i for i in state.heavy.values() if i is not None)
    light = [i for i in range(len(state.cliques)) if i not in heavy
             and popcount(state.twins(i)) >= k + 1]
    if len(light) < 2 * k + 1:
        return None
    counts = {}
    for i in light:
        deg = state.g.degree(lowest(state.twins(i)))
        counts[deg] = counts.get(deg, 0) + 1
    for deg, count in sorted(counts.items()):
        if count >= len(light) - k:
            return light, deg
    return light, None


def _light(ctx):
    st = _state(ctx)
    if "light" not in ctx.params or ctx.params["light"][0] is not st:
        ctx.params["light"] = (st, light_analysis(st))
    return ctx.params["light"][1]


def rule_degree(ctx):
    found = _light(ctx)
    if found is not None and found[1] is None:
        return Firing("UCVD-DEG", decision=NO)
    return None


def rule_ucvd7(ctx):
    found = _light(ctx)
    if found is None:
        return None
    d = found[1]
    for v in range(ctx.graph.n):
        if ctx.graph.degree(v) < d:
            return Firing("UCVD7", remove=1 << v, spend=1, forced=True)
    return None


def rule_ucvd8(ctx):
    found = _light(ctx)
    if found is None:
        return None
    light, d = found
    st = _state(ctx)
    for i in light:
        C = st.cliques[i]
        if popcount(C) != d + 1:
            continue
        around = 0
        for v in bits(C):
            around |= ctx.graph.adj(v)
        around &= ~C
        if around:
            return Firing("UCVD8", remove=around, spend=popcount(around),
                          forced=True)
    return None


def rule_ucvd10(ctx):
    found = _light(ctx)
    if found is None:
        return None
    light, d = found
    st = _state(ctx)
    larger = sum(1 for i in light if popcount(st.cliques[i]) > d + 1)
    if larger > ctx.k:
        return Firing("UCVD10", decision=NO)
    return None


def rule_case2(ctx):
    return Firing("CASE2", decision=REDUCE)


UCVD_RULES = [
    rule_uniform, rule_budget, rule_packing, rule_ucvd1, rule_ucvd2,
    rule_ucvd3, rule_case1, rule_ucvd3a, rule_ucvd4, rule_ucvd6, rule_degree,
    rule_ucvd7, rule_ucvd8, rule_ucvd10, rule_case2,
]


def kernelize_ucvd(g, k):
    """Run the UCVD rules to a fixpoint and return a KernelOutcome."""
    ctx = KernelContext(Instance(g, k, "ucvd"))
    outcome = run_rules(ctx, UCVD_RULES)
    logger.info("ucvd kernel: n {} -> {}, k {} -> {}".format(
        g.n, ctx.graph.n, k, ctx.k
    ))
    return outcome
