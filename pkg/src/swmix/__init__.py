"""Small-world random graphs on the torus: sampling, mixing, expansion.

The model lives on the (2n+1) x (2n+1) torus grid: all grid edges are always
present, and each vertex pair at torus distance d >= 2 independently gains a
long-range edge with probability d^(-r) / Z.  The package samples such
graphs, measures lazy-random-walk mixing times and spectral gaps, analyses
edge and vertex expansion and conductance, and drives seeded, reproducible
parameter sweeps over (n, r) grids from a CLI.
"""

from ._version import __version__
from .errors import CapacityError, ConvergenceError, GraphFormatError
from .torus import (
    num_vertices,
    coord_to_index,
    index_to_coord,
    torus_distance,
    ring_size,
    ring,
    ring_offsets,
    torus_neighbor_indices,
    torus_edge_boundary,
    torus_boundary_count,
    mask_from_indices,
    BoxPartition,
    make_box_partition,
    box_core,
    box_core_dichotomy,
)
from .generate import (
    ModelParams,
    SmallWorldGraph,
    long_range_normalizer,
    edge_probability,
    sample_graph,
    sample_graph_naive,
    torus_only_graph,
    save_graph,
    load_graph,
)
from .bfs import bfs_distances, double_sweep, exact_diameter
from .walk import (
    stationary,
    lazy_kernel,
    step_distribution,
    tv_distance,
    distance_to_stationarity,
    MixingEstimate,
    mixing_time,
    heuristic_start_vertices,
    second_eigenpair,
    spectral_gap,
    relaxation_bounds,
    sample_trajectory,
)
from .expansion import (
    CutReport,
    cut_report,
    edge_boundary,
    vertex_boundary,
    degree_sum,
    conductance,
    ExpansionVerdict,
    is_expanding,
    min_conductance_bruteforce,
    sweep_cut,
    ball_set,
    count_connected_box_sets,
    diameter,
)
from .harness import (
    SweepConfig,
    ExperimentRecord,
    RoutingResult,
    derive_seed,
    config_digest,
    run_mixing_sweep,
    run_conductance_sweep,
    run_diameter_sweep,
    run_wq_experiment,
    run_routing_sweep,
    run_expansion_sweep,
    run_sweep,
    greedy_route,
    emit,
    load_records,
    load_sweep_config,
)

__all__ = [
    "__version__",
    "CapacityError",
    "ConvergenceError",
    "GraphFormatError",
    "num_vertices",
    "coord_to_index",
    "index_to_coord",
    "torus_distance",
    "ring_size",
    "ring",
    "ring_offsets",
    "torus_neighbor_indices",
    "torus_edge_boundary",
    "torus_boundary_count",
    "mask_from_indices",
    "BoxPartition",
    "make_box_partition",
    "box_core",
    "box_core_dichotomy",
    "ModelParams",
    "SmallWorldGraph",
    "long_range_normalizer",
    "edge_probability",
    "sample_graph",
    "sample_graph_naive",
    "torus_only_graph",
    "save_graph",
    "load_graph",
    "bfs_distances",
    "double_sweep",
    "exact_diameter",
    "stationary",
    "lazy_kernel",
    "step_distribution",
    "tv_distance",
    "distance_to_stationarity",
    "MixingEstimate",
    "mixing_time",
    "heuristic_start_vertices",
    "second_eigenpair",
    "spectral_gap",
    "relaxation_bounds",
    "sample_trajectory",
    "CutReport",
    "cut_report",
    "edge_boundary",
    "vertex_boundary",
    "degree_sum",
    "conductance",
    "ExpansionVerdict",
    "is_expanding",
    "min_conductance_bruteforce",
    "sweep_cut",
    "ball_set",
    "count_connected_box_sets",
    "diameter",
    "SweepConfig",
    "ExperimentRecord",
    "RoutingResult",
    "derive_seed",
    "config_digest",
    "run_mixing_sweep",
    "run_conductance_sweep",
    "run_diameter_sweep",
    "run_wq_experiment",
    "run_routing_sweep",
    "run_expansion_sweep",
    "run_sweep",
    "greedy_route",
    "emit",
    "load_records",
    "load_sweep_config",
]
