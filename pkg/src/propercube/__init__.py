"""propercube: exact shortest properly-colored path analysis for
2-edge-colored hypercube interconnection networks.

Core objects: :class:`Vertex`, :class:`Coloring`, and the pair metrics
(o, t, gamma, pd).  The counting module gives exact big-integer path counts,
the enumeration module generates the paths themselves, and the oracle module
is an independent brute-force engine every closed form is verified against.
"""

__version__ = "0.1.0"

from .core import (
    Coloring,
    DimensionMismatchError,
    PairProfile,
    Vertex,
    class_difference,
    gamma,
    pair_profile,
    parse_coloring,
    proper_distance,
)
from .counting import (
    WordConstraint,
    count_shortest_proper_paths,
    j1_reference_count,
    profile_path_count,
    word_count_closed,
    word_count_sum,
)
from .enumeration import (
    PathCheck,
    ProperPath,
    enumerate_shortest_proper_paths,
    is_proper_path,
    shortest_path_witness,
)
from .oracle import (
    BudgetExceededError,
    ColoredGraph,
    build_colored_hypercube,
    dump_edge_list,
    load_edge_list,
    oracle_count_shortest,
    oracle_count_shortest_walks,
    oracle_proper_distance,
    proper_distances_from,
    shortest_walk_counts_from,
)
from .verify import Mismatch, VerificationReport, run_verification

__all__ = [
    "__version__",
    "Coloring",
    "DimensionMismatchError",
    "PairProfile",
    "Vertex",
    "class_difference",
    "gamma",
    "pair_profile",
    "parse_coloring",
    "proper_distance",
    "WordConstraint",
    "count_shortest_proper_paths",
    "j1_reference_count",
    "profile_path_count",
    "word_count_closed",
    "word_count_sum",
    "PathCheck",
    "ProperPath",
    "enumerate_shortest_proper_paths",
    "is_proper_path",
    "shortest_path_witness",
    "BudgetExceededError",
    "ColoredGraph",
    "build_colored_hypercube",
    "dump_edge_list",
    "load_edge_list",
    "oracle_count_shortest",
    "oracle_count_shortest_walks",
    "oracle_proper_distance",
    "proper_distances_from",
    "shortest_walk_counts_from",
    "Mismatch",
    "VerificationReport",
    "run_verification",
]
