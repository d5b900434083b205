"""Maximum stable sets, cores and pendant vertices of trees."""

from __future__ import annotations

from .core import (
    BondingSplit,
    CoreReport,
    InconsistencyError,
    SUIConditions,
    canonical_split,
    clique_bond,
    core,
    core_by_enumeration,
    core_pendant_report,
    find_even_core_pendant_pair,
    has_perfect_matching,
    is_alpha_plus_stable,
    is_strong_unique_independence,
    split_at,
)
from .formats import ParseError, parse_edge_list, parse_graph6, to_dot, to_edge_list, to_graph6
from .graph import (
    Bipartition,
    Forest,
    Graph,
    GraphError,
    Tree,
    bipartition,
    connected_components,
    distance,
    path,
    pendant_vertices,
    prufer_decode,
    prufer_encode,
    random_tree,
    remove_vertices,
    spider,
    star,
)
from .search import SearchReport, open_problem_search
from .stable import (
    OmegaSample,
    OracleCapError,
    StableSet,
    alpha_exact,
    alpha_forest,
    enumerate_maximal_stable_sets,
    enumerate_mss,
    extend_pendant_stable_set,
    is_maximal_stable,
    is_stable,
    max_stable_set,
)
from .theorems import (
    THEOREM_IDS,
    SweepPlan,
    VerdictRecord,
    replay,
    sweep,
    verify,
    verify_all,
    verify_bonding_laws,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
