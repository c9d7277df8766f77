"""Shortest path reconfiguration: oracles, class solvers, reductions and cost variants."""
from .errors import CapExceeded, InvalidPath, ReconfigError
from .graph import (
    BfsLayering,
    Graph,
    StInstance,
    bfs_layering,
    count_shortest_paths,
    enumerate_shortest_paths,
    interval,
    is_st_shortest_path,
    load_graph,
    prune_to_shortest_dag,
)
from .oracle import (
    INFINITE,
    KStep,
    ReconfigGraph,
    ReconfigSequence,
    build_reconfig_graph,
    k_step_neighbors,
    large_k_shortcut,
    reconfig_diameter,
    shortest_reconfig_sequence,
)
from .costs import CostModel, CostedSequence, Unbounded, min_max, min_sum, min_top_l, reduc_costs, reduc_decide
from .reductions import (
    LabeledLineGraph,
    ReducedInstance,
    even_odd_subdivide,
    graph_power,
    kspr_line_instance,
    line_graph,
    subdivide_uniform,
)
from .generators import gadget_chain

__version__ = "0.1.0"
