"""Exact-arithmetic McKay correspondence engine for abelian subgroups of SL(3,C).

The pipeline, in dependency order: groups (characters via lattice quotients),
lattice (junior simplex), ghilb (torus-fixed clusters and the fan), reid
(carving ratios and markings), quiver (arrow vanishing and sink-source
graphs), transforms (degrees and supports), verify (the correspondence
theorems, machine-checked).
"""

from .errors import McKayLabError
from .groups import Character, GroupData, group_from_generators, parse_group_spec
from .lattice import Cone, WeightVector, cone_is_unimodular, junior_points, valuation
from .ghilb import (
    GGraph,
    GHilbFan,
    build_fan,
    chart_generator,
    cone_of_ggraph,
    divisor_coefficients,
    enumerate_ggraphs,
    minimal_monomials,
    tautological_degree,
)
from .reid import (
    CarvingRatio,
    MarkedTriangulation,
    VertexCase,
    carving_ratio,
    classify_fan_vertex,
    edge_character,
    marked_triangulation,
    regular_triangle_defect,
    vertex_marking,
)
from .quiver import (
    ChargeLine,
    QuiverAnalysis,
    SinkSourceGraph,
    VertexClass,
    quiver_counts,
    quiver_triangles,
    shape_lengths,
    torus_positions,
)
from .transforms import (
    TransformProfile,
    support_h0,
    support_h1,
    support_h2,
    transform_profile,
)
from .verify import (
    GroupVerification,
    verify_group,
    verify_reids_recipe_theorem,
    verify_shape_correspondence,
)

__version__ = "0.1.0"

__all__ = [
    "Character",
    "CarvingRatio",
    "ChargeLine",
    "Cone",
    "GGraph",
    "GHilbFan",
    "GroupData",
    "GroupVerification",
    "MarkedTriangulation",
    "McKayLabError",
    "QuiverAnalysis",
    "SinkSourceGraph",
    "TransformProfile",
    "VertexCase",
    "VertexClass",
    "WeightVector",
    "build_fan",
    "carving_ratio",
    "chart_generator",
    "classify_fan_vertex",
    "cone_is_unimodular",
    "cone_of_ggraph",
    "divisor_coefficients",
    "edge_character",
    "enumerate_ggraphs",
    "group_from_generators",
    "junior_points",
    "marked_triangulation",
    "minimal_monomials",
    "parse_group_spec",
    "quiver_counts",
    "quiver_triangles",
    "regular_triangle_defect",
    "shape_lengths",
    "support_h0",
    "support_h1",
    "support_h2",
    "tautological_degree",
    "torus_positions",
    "transform_profile",
    "valuation",
    "verify_group",
    "verify_reids_recipe_theorem",
    "verify_shape_correspondence",
    "vertex_marking",
]
