"""Presentations of semi-invariant rings SI(Q, d) of Euclidean quivers.

Classes:
    Presentation: Generators, relations and classification.
    Generator: One generator with its weight.
    GeneratorKind: Arc generator or homogeneous basis element.
    Relation: One relation.
    Classification: Shape of the algebra.

Functions:
    generators: Generator list.
    relations: Relation list.
    classify_algebra: Polynomial ring, hypersurface or dense orbit case.
    weight_space_dim_formula: binomial(p + m, m).
    presentation: Assemble everything.
"""

from .assembly import (
    classify_algebra,
    eliminate,
    generators,
    homogeneous_id,
    presentation,
    relations,
    weight_space_dim_formula,
)
from .structs import Classification, Generator, GeneratorKind, Presentation, Relation

__all__ = [
    "Classification",
    "Generator",
    "GeneratorKind",
    "Presentation",
    "Relation",
    "classify_algebra",
    "eliminate",
    "generators",
    "homogeneous_id",
    "presentation",
    "relations",
    "weight_space_dim_formula",
]
