"""Decide, with certificates, whether the full variable ideal is a colon
ideal of the square of a graph's closed neighborhood ideal.

Two independent routes are exposed and cross-checked: an exhaustive
bitmask witness search (:mod:`.witness`) and structural criteria with
checkable certificates (:mod:`.criteria`).
"""

from .errors import BudgetExceededError
from .graphs import (INFINITE, MAX_VERTICES, Graph, VertexSet, circulant, complete,
                     connected_graphs, cycle, format_graph_text, kneser,
                     kneser_vertex_subsets, parse_graph_text, path)
from .monomials import (Monomial, MonomialIdeal, closed_neighborhood_ideal,
                        edge_ideal, graph_from_edge_ideal, minimalize,
                        parse_monomial)
from .witness import (SearchStats, Witness, all_square_witnesses,
                      find_square_witness, find_witness)
from .criteria import (Certificate, ConditionReport, Decision, Hypergraph,
                       Method, Obstruction, Prediction, SupportStructureReport,
                       Verdict, check_certificate_conditions, decide,
                       far_pair_hypergraph, find_certificate, interior,
                       predict_cubic_circulant, predict_cycle, predict_kneser,
                       support_structure_report, verify_certificate)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "INFINITE",
    "MAX_VERTICES",
    "Graph",
    "VertexSet",
    "cycle",
    "path",
    "complete",
    "circulant",
    "kneser",
    "kneser_vertex_subsets",
    "connected_graphs",
    "parse_graph_text",
    "format_graph_text",
    "Monomial",
    "MonomialIdeal",
    "minimalize",
    "parse_monomial",
    "closed_neighborhood_ideal",
    "edge_ideal",
    "graph_from_edge_ideal",
    "SearchStats",
    "Witness",
    "find_witness",
    "find_square_witness",
    "all_square_witnesses",
    "Verdict",
    "Method",
    "Obstruction",
    "Hypergraph",
    "Certificate",
    "ConditionReport",
    "Decision",
    "Prediction",
    "far_pair_hypergraph",
    "check_certificate_conditions",
    "find_certificate",
    "verify_certificate",
    "interior",
    "SupportStructureReport",
    "support_structure_report",
    "decide",
    "predict_cycle",
    "predict_cubic_circulant",
    "predict_kneser",
    "__version__",
]
