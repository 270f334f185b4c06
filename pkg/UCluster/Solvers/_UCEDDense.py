__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""UCED on everywhere dense graphs (minimum degree at least alpha * n).

For a guessed clique size h+1 the vertices of degree at least h + sqrt(k)
form the set L.  Each of them loses at least sqrt(k) edges, so in a yes
instance |L| <= 2 sqrt(k).  Without L the final cliques are the parts of a
d-way cut of G - L with d = n/(h+1) and at most k crossing edges.  The
minimum cut is tried first, then every partition of G - L into d small
cliques within budget, and the vertices of L are placed back into the parts
by enumeration.

Small or sparse inputs are handed to the branching solver:

    (alpha n)^2 < dense_guard * k
    n <= max(2 sqrt(k), 4 sqrt(k) / alpha, 7 sqrt(k) / alpha)
    k == 0 or minimum degree 0

and so is any instance the cut path answers no to while a clique could lie
inside L or below the guessed sizes.

The cut oracle is any callable with the signature of oracle_dway_cut.
"""

import logging
import math

from UCluster.Graph import popcount, to_mask
from UCluster._Exceptions import CapacityException
from UCluster._Instance import Witness
from UCluster.Managers import WorkerPool, get_config, check_token
from UCluster.Oracle import (
    oracle_dway_cut, clique_dway_cuts, edits_for_blocks
)
from UCluster.Solvers._UCEDBranch import solve_uced

logger = logging.getLogger(__name__)


class DenseContext(object):
    """Parameters of one clique-size guess on the cut path."""

    __slots__ = ("n", "alpha", "h", "L", "d_parts", "cut")

    def __init__(self, n, alpha, h, L, d_parts, cut=None):
        self.n = n
        self.alpha = alpha
        self.h = h
        self.L = tuple(L)
        self.d_parts = d_parts
        self.cut = cut

    def __repr__(self):
        return "DenseContext(n={}, alpha={:.3f}, h={}, |L|={}, d={})".format(
            self.n, self.alpha, self.h, len(self.L), self.d_parts
        )


def heavy_set_L(g, h, k):
    """Vertices of degree at least h + sqrt(k), as a sorted tuple."""
    threshold = h + math.sqrt(k)
    return tuple(v for v in range(g.n) if g.degree(v) >= threshold)


def reconstruct_from_cut(g, L, parts, h, k):
    """Place every vertex of L into a part so that all parts become
    (h+1)-cliques; return the crossing edges if there are at most k of them,
    else None."""
    L = tuple(sorted(L))
    masks = [to_mask(p) for p in parts]
    need = [h + 1 - popcount(m) for m in masks]
    if any(x < 0 for x in need) or sum(need) != len(L):
        return None
    if not all(g.is_clique(m) for m in masks):
        return None
    # all parts end up as (h+1)-cliques, so the crossing count is fixed
    cost = g.m - len(masks) * h * (h + 1) // 2
    if cost > k:
        return None

    def place(i):
        if i == len(L):
            return True
        v = L[i]
        for j in range(len(masks)):
            if need[j] == 0 or masks[j] & ~g.adj(v):
                continue
            masks[j] |= 1 << v
            need[j] -= 1
            if place(i + 1):
                return True
            masks[j] &= ~(1 << v)
            need[j] += 1
        return False

    if not place(0):
        return None
    return edits_for_blocks(g, masks, "delete")


def _fallback_reason(g, k, dense_guard):
    n = g.n
    delta = min(g.degrees(), default=0)
    if k == 0 or delta == 0:
        return "k = 0 or isolated vertex"
    alpha = delta / n
    root = math.sqrt(k)
    if (alpha * n) ** 2 < dense_guard * k:
        return "(alpha n)^2 = {} < {} k".format((alpha * n) ** 2, dense_guard)
    if n <= max(2 * root, 4 * root / alpha, 7 * root / alpha):
        return "n = {} below the size threshold".format(n)
    return None


def h_guesses(g, k):
    """Clique sizes minus one worth trying: (h+1) divides n and
    h+1 >= alpha n - sqrt(k)."""
    delta = min(g.degrees(), default=0)
    low = delta - math.sqrt(k)
    return [c - 1 for c in range(1, g.n + 1) if g.n % c == 0 and c >= low]


def _cut_parts(rest, cut):
    return [tuple(rest.labels[v] for v in p) for p in cut[1]]


def try_h(g, k, h, cut_oracle=oracle_dway_cut, token=None):
    """(DenseContext, edges) for one guess of h on the cut path, or None.

    The minimum d-way cut from cut_oracle is tried first.  Minimum cuts can
    tie, and a tied one may leave parts of the wrong sizes, so when it does
    not rebuild into (h+1)-cliques every partition of G - L into d cliques
    of at most h+1 vertices with at most k crossing edges is tried."""
    n = g.n
    alpha = min(g.degrees()) / n
    d_parts = n // (h + 1)
    L = heavy_set_L(g, h, k)
    dense = DenseContext(n, alpha, h, L, d_parts)
    if len(L) > 2 * math.sqrt(k):
        logger.debug("dense: h={} skipped, |L|={}".format(h, len(L)))
        return None
    rest = g.remove_vertices(to_mask(L))
    if d_parts > rest.n or rest.n == 0:
        return None
    if g.m - d_parts * h * (h + 1) // 2 > k:
        return None
    try:
        cut = cut_oracle(rest, d_parts, k, token=token)
    except CapacityException as e:
        logger.error("dense: cut oracle failed at h={}: {}".format(h, e))
        raise
    if cut is None:
        return None
    parts = _cut_parts(rest, cut)
    edges = reconstruct_from_cut(g, L, parts, h, k)
    if edges is None:
        logger.debug("dense: h={} minimum cut {} does not rebuild".format(
            h, parts
        ))
        for cut in clique_dway_cuts(rest, d_parts, k, max_part=h + 1,
                                    token=token):
            parts = _cut_parts(rest, cut)
            edges = reconstruct_from_cut(g, L, parts, h, k)
            if edges is not None:
                break
    if edges is None:
        return None
    dense.cut = (sorted(rest.root_edge(e) for e in cut[0]), parts)
    logger.debug("dense: {} -> {}".format(dense, edges))
    return dense, edges


def _incomplete_reason(g, k, hs):
    """Why an empty search over hs does not prove a no-instance, or None."""
    n = g.n
    delta = min(g.degrees())
    for c in range(1, n + 1):
        h = c - 1
        # every vertex drops to degree h, so n (delta - h) <= 2k
        if n % c == 0 and h not in hs and 0 <= n * (delta - h) <= 2 * k:
            return "clique size {} below the guessed sizes".format(c)
    for h in hs:
        # a final clique made of L vertices alone has no part in G - L
        L = heavy_set_L(g, h, k)
        if h + 1 <= len(L) <= 2 * math.sqrt(k):
            return "L may hold a whole clique"
    return None


def dense_search(g, k, cut_oracle=oracle_dway_cut, lower_guard=False,
                 dense_guard=None, workers=1, token=None):
    """(DenseContext, edges) from the cut path, None for no, or the string
    reason when the instance has to go to the branching solver."""
    if dense_guard is None:
        dense_guard = get_config().dense_guard
    if k == 0 or min(g.degrees(), default=0) == 0:
        return "k = 0 or isolated vertex"
    if not lower_guard:
        reason = _fallback_reason(g, k, dense_guard)
        if reason is not None:
            return reason
    g = g.relabel(tuple(range(g.n)))
    hs = h_guesses(g, k)
    logger.debug("dense: h guesses {}".format(hs))
    found = None
    if workers > 1 and len(hs) > 1:
        found = WorkerPool(workers).first_success(
            try_h, [(g, k, h, cut_oracle) for h in hs], token=token,
            pass_token=True
        )
    else:
        for h in hs:
            check_token(token)
            found = try_h(g, k, h, cut_oracle, token)
            if found is not None:
                break
    if found is None:
        reason = _incomplete_reason(g, k, hs)
        if reason is not None:
            return reason
    return found


def solve_uced_dense(g, k, cut_oracle=oracle_dway_cut, lower_guard=False,
                     dense_guard=None, workers=1, token=None):
    """Witness for (g, k) as uced through the dense algorithm, or None."""
    found = dense_search(g, k, cut_oracle, lower_guard, dense_guard, workers,
                         token)
    if isinstance(found, str):
        logger.info("dense: falling back to branching: {}".format(found))
        return solve_uced(g, k, workers=workers, token=token)
    if found is None:
        return None
    return Witness("uced", found[1])
