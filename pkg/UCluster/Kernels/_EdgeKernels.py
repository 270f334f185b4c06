__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Degree-profile kernels for the three edge variants.

All three start from the same preparation step.  With |V| >= 4k+1 at most 2k
vertices can be touched by k edits, so in any solution the final clique size
is d+1 where d is the degree shared by at least |V| - 2k vertices.  That d is
fixed once, from the input, and every later rule is relative to it.

The variants then differ only in which degree window is feasible and in the
rules that follow:

    ucee (edit)    window [d - k, d + k]   O(k^2) kernel
    uced (delete)  window [d, d + k]       6k kernel
    ucea (add)     window [d - k, d]       5k kernel
"""

import logging

from UCluster.Graph import (
    bits, popcount, to_mask, norm_edge, maximal_p3_packing,
    clique_masks, is_uniform_cluster,
)
from UCluster._Instance import Instance
from UCluster.Kernels._KernelOutcome import (
    KernelContext, Firing, run_rules, YES, NO, REDUCE, SMALL
)

logger = logging.getLogger(__name__)

LARGE_D = "large-d"
SMALL_D = "small-d"


def ucee_bound(k):
    return 45 * k * k + 12 * k - 1


def uced_bound(k):
    return 6 * k


def ucea_bound(k):
    return 5 * k


def _large_threshold(variant, k):
    if variant == "ucee":
        return 6 * k
    if variant == "uced":
        return 2 * k
    return k + 1


class DegreeProfile(object):
    """Target degree d, the vertices whose degree differs from it and the
    case the variant's kernel falls into."""

    __slots__ = ("d", "deviants", "case")

    def __init__(self, d, deviants, case=None):
        self.d = d
        self.deviants = tuple(deviants)
        self.case = case

    def __repr__(self):
        return "DegreeProfile(d={}, deviants={}, case={})".format(
            self.d, list(self.deviants), self.case
        )


def prepare_degree_profile(g, k, variant=None):
    """DegreeProfile of g, or SMALL when |V| <= 4k (the instance is already
    its own kernel), or NO when no degree is shared by |V| - 2k vertices.
    The case tag is only filled in when a variant is given."""
    if g.n <= 4 * k:
        return SMALL
    counts = {}
    for deg in g.degrees():
        counts[deg] = counts.get(deg, 0) + 1
    for d in sorted(counts):
        if counts[d] >= g.n - 2 * k:
            case = None
            if variant is not None:
                case = LARGE_D if d >= _large_threshold(variant, k) else SMALL_D
            deviants = [v for v in range(g.n) if g.degree(v) != d]
            return DegreeProfile(d, deviants, case)
    return NO


def _deviant_count(g, d):
    return sum(1 for deg in g.degrees() if deg != d)


def isolated_cliques(g, size, alive=None):
    """Components of g that are cliques on exactly `size` vertices, lowest
    ids first.  With alive, only components contained in alive count."""
    out = []
    for comp in g.component_masks():
        if alive is not None and comp & ~alive:
            continue
        if popcount(comp) == size and g.is_clique(comp):
            out.append(comp)
    return out


def retention_drop(g, d, k):
    """Isolated (d+1)-cliques beyond the fewest x that still leave
    t + x(d+1) >= 2k+1 vertices, where t counts the vertices outside them.
    Returns the mask to remove."""
    cliques = isolated_cliques(g, d + 1)
    t = g.n - len(cliques) * (d + 1)
    x = 0
    while x < len(cliques) and t + x * (d + 1) < 2 * k + 1:
        x += 1
    drop = 0
    for comp in cliques[x:]:
        drop |= comp
    return drop


def _start(ctx):
    """Run the preparation step; returns an outcome when it already decides
    the instance."""
    profile = prepare_degree_profile(ctx.graph, ctx.k, ctx.variant)
    if profile == SMALL:
        return ctx.reduce(SMALL)
    if profile == NO:
        return ctx.decide("PREP", NO)
    ctx.params["d"] = profile.d
    ctx.params["profile"] = profile
    logger.debug("{}: target degree {}, {} deviants, {}".format(
        ctx.variant, profile.d, len(profile.deviants), profile.case
    ))
    return None


def rule_uniform(ctx):
    if is_uniform_cluster(ctx.graph) is not None:
        return Firing("UNIFORM", decision=YES)
    return None


def _window(ctx, low, high, name):
    degrees = ctx.graph.degrees()
    if degrees and (min(degrees) < low or max(degrees) > high):
        return Firing(name, decision=NO)
    return None


def _too_many_deviants(ctx, name):
    if _deviant_count(ctx.graph, ctx.params["d"]) > 2 * ctx.k:
        return Firing(name, decision=NO)
    return None


# UCED
def rule_eed1(ctx):
    d = ctx.params["d"]
    return _window(ctx, d, d + ctx.k, "EED1")


def rule_eed2(ctx):
    return _too_many_deviants(ctx, "EED2")


def rule_eed3(ctx):
    g = ctx.graph
    d = ctx.params["d"]
    for u in range(g.n):
        if g.degree(u) == d and not g.is_clique(g.closed(u)):
            return Firing("EED3", decision=NO)
    return None


def rule_eed4(ctx):
    g = ctx.graph
    d = ctx.params["d"]
    for u in range(g.n):
        if g.degree(u) != d:
            continue
        keep = g.closed(u)
        for v in bits(g.adj(u)):
            if g.degree(v) <= d:
                continue
            extra = g.adj(v) & ~keep
            if popcount(extra) > ctx.k:
                return Firing("EED4", decision=NO)
            edges = [norm_edge(v, w) for w in bits(extra)]
            return Firing("EED4", delete=edges, spend=len(edges), forced=True)
    return None


def rule_eed5(ctx):
    drop = retention_drop(ctx.graph, ctx.params["d"], ctx.k)
    if drop:
        return Firing("EED5", remove=drop)
    return None


def rule_uced_case(ctx):
    if ctx.params["d"] >= 2 * ctx.k:
        return Firing("EED-CASE1", decision=NO)
    return Firing("EED-CASE2", decision=REDUCE)


UCED_RULES = [
    rule_uniform, rule_eed1, rule_eed2, rule_eed3, rule_eed4, rule_eed5,
    rule_uced_case,
]


# UCEA
def rule_eea1(ctx):
    d = ctx.params["d"]
    return _window(ctx, d - ctx.k, d, "EEA1")


def rule_eea2(ctx):
    return _too_many_deviants(ctx, "EEA2")


def rule_eea3(ctx):
    g = ctx.graph
    for comp in g.component_masks():
        if g.is_clique(comp):
            continue
        missing = []
        for u in bits(comp):
            for w in bits(comp & ~g.adj(u) & ~((1 << (u + 1)) - 1)):
                missing.append((u, w))
        if len(missing) > ctx.k:
            return Firing("EEA3", decision=NO)
        return Firing("EEA3", add=missing, spend=len(missing), forced=True)
    return None


def rule_eea4(ctx):
    drop = retention_drop(ctx.graph, ctx.params["d"], ctx.k)
    if drop:
        return Firing("EEA4", remove=drop)
    return None


def rule_eea5(ctx):
    d = ctx.params["d"]
    if d < ctx.k + 1:
        return None
    for comp in ctx.graph.component_masks():
        if popcount(comp) < d + 1:
            return Firing("EEA5", decision=NO)
    return None


def rule_ucea_case(ctx):
    if ctx.params["d"] >= ctx.k + 1:
        # every component is a (d+1)-clique once EEA1, EEA3 and EEA5 pass
        return Firing("EEA-CASE1", decision=YES)
    return Firing("EEA-CASE2", decision=REDUCE)


UCEA_RULES = [
    rule_uniform, rule_eea1, rule_eea2, rule_eea3, rule_eea4, rule_eea5,
    rule_ucea_case,
]


# UCEE
class EditState(object):
    """S from a maximal P3 packing (fixed once computed) and the cliques of
    G - S, with the clique each S vertex is attached to."""

    def __init__(self, g, S):
        self.g = g
        self.S = S
        self.cliques = clique_masks(g, g.all_mask & ~S) or []

    def hits(self, s, C):
        return popcount(self.g.adj(s) & C)

    def touched(self, s):
        return [C for C in self.cliques if self.g.adj(s) & C]

    def attached(self, s):
        """The clique s is fully adjacent to, or None."""
        for C in self.touched(s):
            if C & ~self.g.adj(s) == 0:
                return C
        return None


def _packed(ctx):
    """S as a mask in the ids of the current graph."""
    roots = ctx.params["S"]
    return to_mask(v for v, label in enumerate(ctx.graph.labels) if label in roots)


def _edit_state(ctx):
    if ctx.state is None:
        ctx.state = EditState(ctx.graph, _packed(ctx))
    return ctx.state


def rule_eeer0(ctx):
    d = ctx.params["d"]
    return _window(ctx, d - ctx.k, d + ctx.k, "EEER0")


def rule_eeer01(ctx):
    return _too_many_deviants(ctx, "EEER01")


def rule_packing(ctx):
    """Compute S once, kept in root ids.  G - S is a cluster graph and the
    rules that follow only edit pairs with an endpoint in S, so S stays valid
    throughout."""
    if "S" in ctx.params:
        return None
    packing = maximal_p3_packing(ctx.graph)
    S = 0
    for p3 in packing:
        S |= to_mask(p3)
    ctx.params["S"] = frozenset(ctx.graph.labels[v] for v in bits(S))
    if len(packing) > ctx.k:
        return Firing("P3PACK", decision=NO)
    return None


def rule_c2k(ctx):
    if ctx.params["d"] < 6 * ctx.k:
        return None
    for C in _edit_state(ctx).cliques:
        if popcount(C) <= 2 * ctx.k:
            return Firing("C2K", decision=NO)
    return None


def _large(ctx):
    return ctx.params["d"] >= 6 * ctx.k


def rule_eeer1(ctx):
    if not _large(ctx):
        return None
    st = _edit_state(ctx)
    for s in bits(st.S):
        for C in st.touched(s):
            missing = C & ~ctx.graph.adj(s)
            if missing and st.hits(s, C) >= ctx.k + 1:
                edges = [norm_edge(s, w) for w in bits(missing)]
                return Firing("EEER1", add=edges, spend=len(edges), forced=True)
    return None


def rule_eeer2(ctx):
    if not _large(ctx):
        return None
    st = _edit_state(ctx)
    for s in bits(st.S):
        for C in st.touched(s):
            if popcount(C & ~ctx.graph.adj(s)) >= ctx.k + 1:
                edges = [norm_edge(s, w) for w in bits(ctx.graph.adj(s) & C)]
                return Firing("EEER2", delete=edges, spend=len(edges),
                              forced=True)
    return None


def rule_eeer3(ctx):
    if not _large(ctx):
        return None
    st = _edit_state(ctx)
    for s in bits(st.S):
        if len(st.touched(s)) > 1:
            return Firing("EEER3", decision=NO)
    return None


def rule_eeer4(ctx):
    if not _large(ctx):
        return None
    st = _edit_state(ctx)
    g = ctx.graph
    for s1 in bits(st.S):
        C = st.attached(s1)
        if C is None:
            continue
        for s2 in bits(st.S & ~g.adj(s1) & ~((1 << (s1 + 1)) - 1)):
            if st.attached(s2) == C:
                return Firing("EEER4", add=[(s1, s2)], spend=1, forced=True)
    return None


def rule_eeer5(ctx):
    if not _large(ctx):
        return None
    st = _edit_state(ctx)
    g = ctx.graph
    for s1 in bits(st.S):
        C1 = st.attached(s1)
        for s2 in bits(st.S & g.adj(s1) & ~((1 << (s1 + 1)) - 1)):
            C2 = st.attached(s2)
            if C1 != C2 and (C1 is not None or C2 is not None):
                return Firing("EEER5", delete=[(s1, s2)], spend=1, forced=True)
    return None


def rule_eeer6(ctx):
    if _large(ctx):
        return None
    d = ctx.params["d"]
    outside = ctx.graph.all_mask & ~_packed(ctx)
    cliques = isolated_cliques(ctx.graph, d + 1, outside)
    drop = 0
    for comp in cliques[2 * ctx.k + 1:]:
        drop |= comp
    if drop:
        return Firing("EEER6", remove=drop)
    return None


def rule_ucee_case(ctx):
    if _large(ctx):
        # fixpoint of EEER1-5 that is not a uniform (d+1)-cluster
        return Firing("LEMMA2K", decision=NO)
    return Firing("CASE2", decision=REDUCE)


UCEE_RULES = [
    rule_uniform, rule_eeer0, rule_eeer01, rule_packing, rule_c2k,
    rule_eeer1, rule_eeer2, rule_eeer3, rule_eeer4, rule_eeer5, rule_eeer6,
    rule_ucee_case,
]


def _kernelize(g, k, variant, rules):
    ctx = KernelContext(Instance(g, k, variant))
    outcome = _start(ctx)
    if outcome is None:
        outcome = run_rules(ctx, rules)
    logger.info("{} kernel: n {} -> {}, k {} -> {}".format(
        variant, g.n, ctx.graph.n, k, ctx.k
    ))
    return outcome


def kernelize_ucee(g, k):
    return _kernelize(g, k, "ucee", UCEE_RULES)


def kernelize_uced(g, k):
    """At most 6k vertices, or decided."""
    return _kernelize(g, k, "uced", UCED_RULES)


def kernelize_ucea(g, k):
    """At most 5k vertices, or decided."""
    return _kernelize(g, k, "ucea", UCEA_RULES)
