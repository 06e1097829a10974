"""Exact coloring, connectivity and Hall-matching tools for extracting
highly connected subgraphs of high chromatic number, plus checkers for the
counting arguments that guarantee them."""

from .coloring import chromatic_number
from .connectivity import is_k_connected, vertex_connectivity
from .corpus import CorpusSpec, generate_corpus
from .decomposition import LightDecomposition, recolor, validate_decomposition
from .estimators import ConnectedSubgraphExtractor, ExactColoring
from .graph import Graph, induced_subgraph, is_proper, stable_partition_from_coloring
from .hall import HallInstance, is_hall_feasible, largest_violator, min_violator, solve_sdr
from .numerical import NumericalLemmaInstance, numerical_lemma_lhs, numerical_lemma_sweep
from .pipeline import extract_subgraph, theorem_oracle, verify_certificate
from .reduction import (
    ReductionPackage,
    boundary_search_d0,
    check_middle_range,
    check_no_large_obstruction,
    check_residual_feasibility,
    generate_package,
    validate_package,
)
from .templates import (
    Template,
    cost_k,
    find_respecting_coloring,
    is_good,
    is_inextensible_for,
    minimal_inextensible_subgraph,
)

__version__ = "0.1.0"
