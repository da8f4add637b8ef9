"""Euclidean (extended Dynkin) quivers: graph class, radical, defect and orbits.

Classes:
    GraphKind: Dynkin, Euclidean or Wild.
    GraphClass: Classification result with the diagram type.
    CoxeterOrder: Composition order of the Coxeter transformation.
    OrbitFamily: One Coxeter orbit of simple regular dimension vectors.
    EuclideanStructure: h, defect weight and orbit families.

Functions:
    classify_graph: Classify the underlying graph.
    radical_generator: Radical generator h.
    defect: Defect <h, d>.
    coxeter_transform: Coxeter transformation.
    coxeter_inverse: Inverse Coxeter transformation.
    defect_zero_roots_below_h: Defect zero roots strictly below h.
    simple_regular_orbits: Compute the EuclideanStructure.
    check_structure: Validate a EuclideanStructure.
"""

from .classification import GraphClass, GraphKind, classify_graph
from .structure import (
    CoxeterOrder,
    EuclideanStructure,
    OrbitFamily,
    check_structure,
    coxeter_inverse,
    coxeter_transform,
    defect,
    defect_zero_roots_below_h,
    radical_generator,
    simple_regular_orbits,
)

__all__ = [
    "CoxeterOrder",
    "EuclideanStructure",
    "GraphClass",
    "GraphKind",
    "OrbitFamily",
    "check_structure",
    "classify_graph",
    "coxeter_inverse",
    "coxeter_transform",
    "defect",
    "defect_zero_roots_below_h",
    "radical_generator",
    "simple_regular_orbits",
]
