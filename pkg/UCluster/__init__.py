"""Kernels, FPT solvers and brute-force oracles for the uniform cluster
modification problems: vertex deletion (ucvd), edge deletion (uced), edge
addition (ucea), edge editing (ucee) and exclusive / inclusive vertex
splitting (ucevs / ucivs)."""
__version__ = "1.0.1"

from UCluster._Exceptions import (
    UClusterException, APIException, InputException, ParseException,
    WitnessException, CapacityException, StructuralException,
    GenerationException, CancelledException,
)
from UCluster.Graph import Graph, is_cluster, is_uniform_cluster
from UCluster._Instance import (
    Instance, Witness, SplitStep, VARIANTS, apply_witness, verify_witness,
    INCLUSIVE, EXCLUSIVE,
)
from UCluster.Kernels import kernelize, kernel_bound, KernelOutcome
from UCluster.Oracle import oracle
from UCluster.Solvers import solve_ucvd, solve_uced, solve_uced_dense
