"""Regions, labels and parking functions of the Shi-to-Ish arrangement family."""

from .arrangement import (
    ArrangementSpec,
    Diagram,
    Hyperplane,
    Region,
    RegionDescription,
    base_region,
    build_arrangement,
    describe,
    draw_diagram,
    enumerate_regions,
    is_feasible,
    label_direct,
    label_from_description,
    region_record,
)
from .core import BudgetError, Label, Permutation, Word, all_words, compose
from .graphs import (
    BurnReport,
    MultiDiGraph,
    RootedGraph,
    build_gkn,
    build_rooted,
    dfs_burn,
    graph_to_dot,
    is_g_parking,
    is_g_parking_bruteforce,
    rooted_to_dot,
    tree_to_word,
)
from .parking import (
    CentreResult,
    ParkingOutcome,
    SortedTail,
    centre,
    classification_report,
    count_tail_parkers,
    is_ish_parking,
    is_k_partial,
    is_parking_function,
    parks_all_tail,
    run_parking,
    sigma_characterization,
    sigma_conditions_hold,
    sort_tail,
)
from .verify import EquivalenceReport, count_sweep, cross_validate, reproduce_tables

__all__ = [
    "ArrangementSpec",
    "BudgetError",
    "BurnReport",
    "CentreResult",
    "Diagram",
    "EquivalenceReport",
    "Hyperplane",
    "Label",
    "MultiDiGraph",
    "ParkingOutcome",
    "Permutation",
    "Region",
    "RegionDescription",
    "RootedGraph",
    "SortedTail",
    "Word",
    "all_words",
    "base_region",
    "build_arrangement",
    "build_gkn",
    "build_rooted",
    "centre",
    "classification_report",
    "compose",
    "count_sweep",
    "count_tail_parkers",
    "cross_validate",
    "describe",
    "dfs_burn",
    "draw_diagram",
    "enumerate_regions",
    "graph_to_dot",
    "is_feasible",
    "is_g_parking",
    "is_g_parking_bruteforce",
    "is_ish_parking",
    "is_k_partial",
    "is_parking_function",
    "label_direct",
    "label_from_description",
    "parks_all_tail",
    "region_record",
    "reproduce_tables",
    "rooted_to_dot",
    "run_parking",
    "sigma_characterization",
    "sigma_conditions_hold",
    "sort_tail",
    "tree_to_word",
]

__version__ = "0.1.0"
