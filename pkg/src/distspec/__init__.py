"""Exact distance spectra of graphs, strongly regular graph theory, Paley
graphs, and tooling to search graph streams for optimistic graphs
(distance matrices with more positive than negative eigenvalues)."""

from .exact import Inertia, char_poly, determinant, float_eigenvalues, inertia, inertia_from_charpoly
from .graph import (
    DisconnectedGraphError,
    Graph,
    are_isomorphic,
    complement,
    complete_graph,
    complete_multipartite,
    cycle,
    diameter,
    distance_matrix,
    is_connected,
    is_self_complementary,
    is_vertex_transitive,
    path,
    petersen_graph,
    random_tree,
    rook_graph,
    shrikhande_graph,
)
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .paley import FiniteField, is_square, make_field, paley, paley_graph
from .search import OptimismReport, classify, enumerate_labeled, exhaustive_check, filter_stream
from .srg import (
    SpectrumTable,
    SrgParams,
    Surd,
    adjacency_spectrum,
    conference_distance_spectrum,
    conference_params,
    detect_srg,
    distance_eigenvalue_map,
    distance_spectrum_from_params,
    family_m2_spectrum,
    is_conference,
)

__version__ = "0.1.0"
