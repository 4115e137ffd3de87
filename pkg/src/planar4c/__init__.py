"""Constructive four-colouring pipeline for embedded planar graphs."""

from .generate import GenConfig, gen_maximal_planar, gen_planar
from .graph import (
    EmbeddingError,
    FaceWalk,
    GraphError,
    GraphFormatError,
    PlanarGraph,
    enumerate_faces,
    euler_validate,
    format_graph,
    parse_graph,
)
from .solver import SearchConfig, brute_force_count, enumerate_system_solutions, solve
from .system import (
    Coloring,
    LinearSystem,
    build_full_system,
    coloring_to_vector,
    rank_exact,
    reduce_system,
    residual,
    vector_to_coloring,
)
from .triangulate import Triangle, Triangulation, enumerate_triangles, triangulate
from .verify import AuditReport, audit, verify_lemma1, verify_lemma2, verify_proper

__all__ = [
    "AuditReport", "Coloring", "EmbeddingError", "FaceWalk", "GenConfig", "GraphError",
    "GraphFormatError", "LinearSystem", "PlanarGraph", "SearchConfig", "Triangle",
    "Triangulation", "audit", "brute_force_count", "build_full_system", "coloring_to_vector",
    "enumerate_faces", "enumerate_system_solutions", "enumerate_triangles", "euler_validate",
    "format_graph", "gen_maximal_planar", "gen_planar", "parse_graph", "rank_exact",
    "reduce_system", "residual", "solve", "triangulate", "vector_to_coloring",
    "verify_lemma1", "verify_lemma2", "verify_proper",
]
