"""Kernels for the six variants and the clique family machinery they share."""
from UCluster.Kernels._KernelOutcome import (
    KernelOutcome, KernelContext, Firing, TraceEntry, run_rules,
    YES, NO, REDUCE, SMALL,
)
from UCluster.Kernels._CliqueFamily import (
    CliqueFamily, PARTITION, COVER, partition_to_splits, cover_to_splits,
    splits_to_family,
)
from UCluster.Kernels._UCVDKernel import (
    CliquePartitionState, heavy_neighbor_of, boundary_set, light_analysis,
    kernelize_ucvd, ucvd_bound, UCVD_RULES,
)
from UCluster.Kernels._EdgeKernels import (
    DegreeProfile, prepare_degree_profile, isolated_cliques, retention_drop,
    kernelize_ucee, kernelize_uced, kernelize_ucea,
    ucee_bound, uced_bound, ucea_bound, UCEE_RULES, UCED_RULES, UCEA_RULES,
)
from UCluster.Kernels._SplitKernels import (
    split_profile, combined_rule, GreedyRun, run_greedy,
    greedy_kd_edge_partition, greedy_sigma_cover, kernelize_ucevs,
    kernelize_ucivs, split_bound,
)
from UCluster._Instance import check_variant

KERNELS = {
    "ucvd": kernelize_ucvd,
    "uced": kernelize_uced,
    "ucea": kernelize_ucea,
    "ucee": kernelize_ucee,
    "ucevs": kernelize_ucevs,
    "ucivs": kernelize_ucivs,
}

BOUNDS = {
    "ucvd": ucvd_bound,
    "uced": uced_bound,
    "ucea": ucea_bound,
    "ucee": ucee_bound,
    "ucevs": split_bound,
    "ucivs": split_bound,
}


def kernel_bound(variant, k):
    """Vertex bound on every reduced instance the variant's kernel emits."""
    check_variant(variant)
    return BOUNDS[variant](k)


def kernelize(variant, g, k):
    check_variant(variant)
    return KERNELS[variant](g, k)
