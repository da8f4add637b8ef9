"""Tube combinatorics: canonical and generic decompositions, polygons and arcs.

Classes:
    CanonicalDecomposition: d = p h + labelled family sums.
    GenericDecomposition: Summands of a general representation.
    Summand: One generic summand.
    LabeledPolygon: An orbit family with its labels.
    Arc: A clockwise arc of a polygon.

Functions:
    canonical_decomposition: Compute the canonical decomposition.
    is_regular: Regularity test.
    generic_decomposition: Compute the generic decomposition.
    labeled_polygons: Polygons of a canonical decomposition.
    admissible_arcs: Admissible arcs of a polygon.
    equal_label_arcs: Non-admissible arcs with equal extreme labels.
    arc_generator_data: Name, dimension and weight of an arc generator.
    min_level_partition: Zero-level arcs partitioning a polygon.
    arc_hom_nonzero: Hom criterion between arc modules.
"""

from .decomposition import (
    CanonicalDecomposition,
    GenericDecomposition,
    Summand,
    canonical_decomposition,
    generic_decomposition,
    is_regular,
)
from .polygons import (
    Arc,
    LabeledPolygon,
    admissible_arcs,
    arc_generator_data,
    arc_hom_nonzero,
    equal_label_arcs,
    labeled_polygons,
    min_level_partition,
)

__all__ = [
    "Arc",
    "CanonicalDecomposition",
    "GenericDecomposition",
    "LabeledPolygon",
    "Summand",
    "admissible_arcs",
    "arc_generator_data",
    "arc_hom_nonzero",
    "canonical_decomposition",
    "equal_label_arcs",
    "generic_decomposition",
    "is_regular",
    "labeled_polygons",
    "min_level_partition",
]
