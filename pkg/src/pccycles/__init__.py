"""Properly colored cycles in edge-colored complete graphs.

Library for finding and packing vertex-disjoint properly colored (PC)
cycles, computing Gallai and anchored partitions, transforming between
colored complete graphs and multipartite tournaments, and running seeded
verification campaigns over all of it at desk scale.
"""

from .ecg import (
    ColoredCompleteGraph,
    CycleSeq,
    VertexPartition,
    color_degree,
    max_mono_degree,
    mono_degree,
    validate,
)
from .cycles import (
    PackingResult,
    enumerate_pc_cycles,
    enumerate_short_pc_cycles,
    find_pc_cycle,
    find_short_pc_cycle,
    greedy_pack,
    is_pc_cycle,
    is_rainbow,
    max_pack,
    pack_exact,
    shorten_pc_cycle,
    yeo_vertex,
)
from .structure import (
    AnchoredPartition,
    GallaiPartition,
    anchored_partition,
    c4s_from_cut,
    find_monochromatic_cut,
    find_rainbow_triangle,
    gallai_partition,
    validate_anchored,
    validate_gallai,
)
from .tournaments import (
    BridgeResult,
    MultipartiteTournament,
    dicycle_to_pc,
    enumerate_dicycles,
    find_dicycle,
    from_multipartite_tournament,
    min_out_degree,
    pack_disjoint_dicycles,
    pad_to_l_partite,
    pc_to_dicycle,
    to_multipartite_tournament,
)
from .constructions import (
    GenSpec,
    build,
    cascade,
    example1,
    example2,
    proper_complete,
    random_colored,
    random_multipartite_tournament,
    walecki_hamilton_cycles,
)
from .fileio import (
    ParseError,
    ecg_to_dot,
    mt_to_dot,
    parse_ecg,
    parse_mt,
    serialize_ecg,
    serialize_mt,
)
from .harness import (
    CounterexampleChecklist,
    VerificationReport,
    Violation,
    check_min_counterexample,
    verify_dicycle_packing,
    exhaustive_tiny,
    hunt_conjecture,
    replay_violation,
    verify_short_cycle_bound,
    verify_greedy_bound,
    verify_proposition_pair,
    verify_theorem_k2,
)

__version__ = "0.1.0"
