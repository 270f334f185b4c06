"""FPT solvers: cluster vertex deletion branching, the UCVD 2^k algorithm,
the UCED branch-and-reduce solver and the dense UCED algorithm."""
from UCluster.Solvers._CVD import cvd_branching
from UCluster.Solvers._UCVDSolver import (
    DisjointInstance, build_completion_matching, solve_disjoint_ucvd, solve_ucvd,
)
from UCluster.Solvers._Score2 import (
    ComponentSolution, solve_score2_component, component_edges_to_root,
)
from UCluster.Solvers._UCEDBranch import (
    BranchStats, pick_branch_edge, required_deletions, branch_for_size,
    solve_uced,
)
from UCluster.Solvers._UCEDDense import (
    DenseContext, heavy_set_L, reconstruct_from_cut, h_guesses, try_h,
    dense_search, solve_uced_dense,
)
