"""Schrijver graphs, drums, winding numbers of 3-colorings, edge criticality
and Klein-bottle / projective-plane quadrangulations, with exact checks."""
from .coloring import (ConstructionError, NoColoringExists, basic_coloring, four_coloring_reduced_drum,
                       is_proper, monochromatic_edges, regular_edge_coloring, sg_n2_edge_coloring,
                       two_coloring_reduced_drum, uk_minus_edge_coloring, yk_minus_edge_coloring)
from .criticality import (EdgeVerdict, classify_reduced_drum_edges, compare_all, critical_edges,
                          is_critical_brute, predict_schrijver_edge)
from .drum import drum, reduced_drum, reduced_drum_direct, sg_cover_map, sg_isomorphism
from .graph import ContractViolation, Graph, InvalidParameter, LoopError, VertexMap
from .quadrangulation import (SignedEmbedding, embed_q, embed_x, embed_y, embed_z, face_census, q_graph,
                              trace_faces, u_graph, x_graph, y_graph, z_graph)
from .schrijver import kneser, schrijver
from .solver import SolverTimeout, chromatic_number, exists_q_coloring
from .winding import OrientedCycle, edge_weight, winding_number

__all__ = [name for name in dir() if not name.startswith("_")]
