"""Quiver data model, integer vectors and the forms attached to a quiver.

Classes:
    Quiver: Validated acyclic connected quiver in topological vertex order.
    Arrow: An arrow between dense vertex indices.
    IntVector: Integer vector indexed by the vertices.
    DimensionVector: Nonnegative integer vector.
    Weight: Integer vector used as a character exponent.

Functions:
    validate_quiver: Build a Quiver from a raw description.
    load_quiver: Load a Quiver from JSON.
    load_dimension_vector: Load a dimension vector from JSON.
    euler_form: Euler form of two vectors.
    quadratic_form: Tits form of a vector.
    weight_of_left_form: Weight of <a, ->.
    weight_of_right_form: Weight of -<-, b>.
    apply_weight: Pairing of a weight with a vector.
"""

from .forms import (
    apply_weight,
    euler_form,
    quadratic_form,
    weight_of_left_form,
    weight_of_right_form,
)
from .parsing import load_dimension_vector, load_quiver
from .quiver import Arrow, Quiver, validate_quiver
from .vectors import DimensionVector, IntVector, Weight, vector_sum

__all__ = [
    "Arrow",
    "DimensionVector",
    "IntVector",
    "Quiver",
    "Weight",
    "apply_weight",
    "euler_form",
    "load_dimension_vector",
    "load_quiver",
    "quadratic_form",
    "validate_quiver",
    "vector_sum",
    "weight_of_left_form",
    "weight_of_right_form",
]
