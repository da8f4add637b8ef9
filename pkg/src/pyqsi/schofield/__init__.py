"""Exact linear algebra and Schofield semi-invariants.

Classes:
    ExactMatrix: Immutable exact rational matrix.
    Representation: Rational matrices on the arrows of a quiver.
    GroupElement: Element of GL(d).

Functions:
    det_exact: Exact determinant.
    rank_exact: Exact rank.
    kernel_dim: Right kernel dimension.
    build_dvw: Matrix of the canonical map d_V^W.
    schofield_value: c(V, W) = det d_V^W.
    schofield_value_lower: c_W(V).
    schofield_value_mod: c(V, W) modulo a prime.
    schofield_vanishes: Zero test for c(V, W).
    hom_dim: dim Hom(V, W).
    ext_dim: dim Ext(V, W).
    act: Action of GL(d) on representations.
    character_value: Character of a weight.
"""

from .exact_matrix import ExactMatrix, det_exact, kernel_dim, rank_exact
from .representation import GroupElement, Representation, act, character_value
from .semi_invariants import (
    build_dvw,
    ext_dim,
    hom_dim,
    schofield_vanishes,
    schofield_value,
    schofield_value_lower,
    schofield_value_mod,
)

__all__ = [
    "ExactMatrix",
    "GroupElement",
    "Representation",
    "act",
    "build_dvw",
    "character_value",
    "det_exact",
    "ext_dim",
    "hom_dim",
    "kernel_dim",
    "rank_exact",
    "schofield_vanishes",
    "schofield_value",
    "schofield_value_lower",
    "schofield_value_mod",
]
