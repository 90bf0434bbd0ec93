"""t-vertex disjoint temporal s,t-paths and temporal-vertex path-cuts."""
from .core import (
    AdjacentTerminalsError,
    GraphFormatError,
    InvalidWalkError,
    Occupancy,
    TemporalEdge,
    TemporalGraph,
    TemporalGraphError,
    TemporalPath,
    TemporalVertex,
    TemporalWalk,
    UnknownVertexError,
    are_t_vertex_disjoint,
    format_graph,
    hits_cut,
    parse_graph,
    parse_path,
    read_graph,
    validate,
    write_graph,
)
from .cuts import find_min_cut, has_two_disjoint_paths, verify_cut
from .disjoint_paths import extract_two_paths, find_two_paths, reduce_to_minimal
from .expansion import build_expansion, max_flow_unit_vertex, walks_menger
from .generators import k_copies, linkage_reduction, named_example, random_graph, sat_reduction
from .reachability import earliest_arrival, extract_walk, find_walk, walk_to_path
from .strictify import map_cut_back, map_cut_forward, map_path_back, map_path_forward, strictify

__version__ = "0.1.0"
