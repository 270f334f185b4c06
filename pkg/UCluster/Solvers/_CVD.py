__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Cluster Vertex Deletion by 3-way branching on induced P3s: one of the
three vertices of every induced P3 has to go."""

import logging

from UCluster.Graph import find_induced_p3
from UCluster.Managers import check_token

logger = logging.getLogger(__name__)


def cvd_branching(g, k, token=None):
    """A vertex set of size <= k whose deletion leaves a cluster graph, as a
    sorted tuple, or None."""
    nodes = [0]

    def branch(alive, budget):
        nodes[0] += 1
        if nodes[0] % 512 == 0:
            check_token(token)
        p3 = find_induced_p3(g, alive)
        if p3 is None:
            return ()
        if budget == 0:
            return None
        for v in p3:
            rest = branch(alive & ~(1 << v), budget - 1)
            if rest is not None:
                return (v,) + rest
        return None

    found = branch(g.all_mask, k)
    logger.debug("cvd branching: {} nodes, k={}".format(nodes[0], k))
    if found is None:
        return None
    return tuple(sorted(found))
