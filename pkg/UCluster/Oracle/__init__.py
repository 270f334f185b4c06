from UCluster.Oracle._Oracle import (
    OracleAnswer, oracle_ucvd, oracle_edge, oracle_ucevs, oracle_ucivs, oracle,
    edge_witness_pairs, cheapest_equal_partition, edits_for_blocks,
)
from UCluster.Oracle._DWayCut import oracle_dway_cut, clique_dway_cuts
