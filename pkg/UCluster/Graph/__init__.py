"""Graph value type and structural primitives."""
from UCluster.Graph._Graph import (
    Graph, popcount, bits, lowest, to_mask, to_tuple, norm_edge,
    find_induced_p3, maximal_p3_packing, clique_masks, cluster_components,
    is_cluster, is_uniform_cluster, edge_score, companion_edges,
    max_edge_score, find_induced_c4, are_true_twins, twin_classes,
)
