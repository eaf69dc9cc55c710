"""Anti-Ramsey numbers for paths: closed forms, extremal colorings and
brute-force checks."""

from .closed_forms import (
    Branch,
    FormulaValue,
    HParams,
    PathSpec,
    TuranDecomposition,
    anti_ramsey,
    ar_value,
    attaining_branch,
    epsilon_of,
    h_value,
    turan_path,
    turan_path_connected,
)
from .colorings import (
    EdgeColoring,
    RepresentingGraph,
    arbitrary_representing,
    construct_clique_coloring,
    construct_star_coloring,
    good_coloring_decompose,
    max_component_representing,
)
from .graphs import BipartiteGraph, Graph, build_h_graph, complete_graph
from .rainbow import (
    RainbowCertificate,
    find_rainbow_path_colorcoding,
    find_rainbow_path_exact,
    validate_certificate,
)

__all__ = [
    "anti_ramsey",
    "ar_value",
    "arbitrary_representing",
    "attaining_branch",
    "BipartiteGraph",
    "Branch",
    "build_h_graph",
    "complete_graph",
    "construct_clique_coloring",
    "construct_star_coloring",
    "EdgeColoring",
    "epsilon_of",
    "find_rainbow_path_colorcoding",
    "find_rainbow_path_exact",
    "FormulaValue",
    "good_coloring_decompose",
    "Graph",
    "h_value",
    "HParams",
    "max_component_representing",
    "PathSpec",
    "RainbowCertificate",
    "RepresentingGraph",
    "turan_path",
    "turan_path_connected",
    "TuranDecomposition",
    "validate_certificate",
]

__version__ = "0.1.0"
