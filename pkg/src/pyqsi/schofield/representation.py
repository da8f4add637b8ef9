"""Representations of a quiver and the action of GL(d).

A representation assigns to every arrow a: x -> y a matrix of shape d(y) x d(x).
The group GL(d) = prod_x GL(d(x)) acts by (g.V)(a) = g(ha) V(a) g(ta)^-1 and a
weight s defines the character g -> prod_x det(g(x))^s(x).

Classes:
    Representation: Matrices on the arrows of a quiver.
    GroupElement: One invertible block per vertex.

Functions:
    act: The action of GL(d) on representations.
    character_value: Value of the character of a weight.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from pyqsi.quiver.quiver import Quiver
    from pyqsi.quiver.vectors import IntVector

# ✅ Standard library imports
from dataclasses import dataclass
from fractions import Fraction
from math import prod

# ✅ Local imports
from pyqsi.exceptions.linear_algebra_error import QuiverMismatch, SingularBlock
from pyqsi.quiver.vectors import DimensionVector
from pyqsi.schofield.exact_matrix import ExactMatrix


@dataclass(frozen=True)
class Representation:
    """A representation of a quiver with exact rational matrices.

    Attributes:
        quiver: The quiver.
        dim: Dimension vector.
        maps: One matrix per arrow, in the arrow order of the quiver, of shape
            dim(head) x dim(tail).
    """

    quiver: Quiver
    dim: DimensionVector
    maps: tuple[ExactMatrix, ...]

    def __post_init__(self) -> None:  # noqa: D105
        self.quiver.check(self.dim)
        if len(self.maps) != len(self.quiver.arrows):
            raise QuiverMismatch(
                f"{len(self.maps)} maps for {len(self.quiver.arrows)} arrows"
            )
        for arrow, matrix in zip(self.quiver.arrows, self.maps, strict=True):
            expected = (self.dim[arrow.head], self.dim[arrow.tail])
            if matrix.shape != expected:
                raise QuiverMismatch(
                    f"map on arrow {arrow.id} has shape {matrix.shape}, "
                    f"expected {expected}"
                )

    @classmethod
    def zero(cls, q: Quiver, dim: DimensionVector) -> Representation:
        """The representation of dimension `dim` with all maps zero."""
        return cls(
            q, dim, tuple(ExactMatrix.zeros(dim[a.head], dim[a.tail]) for a in q.arrows)
        )

    @classmethod
    def from_arrow_maps(
        cls,
        q: Quiver,
        dim: DimensionVector,
        maps: Mapping[str, Sequence[Sequence[int | Fraction]]],
    ) -> Representation:
        """Build a representation from `{arrow id: rows}`."""
        return cls(
            q,
            dim,
            tuple(
                ExactMatrix.from_rows(maps[a.id], cols=dim[a.tail]) for a in q.arrows
            ),
        )

    def map_of(self, arrow_id: str) -> ExactMatrix:
        """Matrix on the arrow with id `arrow_id`."""
        for arrow, matrix in zip(self.quiver.arrows, self.maps, strict=True):
            if arrow.id == arrow_id:
                return matrix
        raise KeyError(arrow_id)

    def direct_sum(self, other: Representation) -> Representation:
        """Block diagonal direct sum self + other.

        Raises:
            QuiverMismatch: If the representations live on different quivers.
        """
        if other.quiver != self.quiver:
            raise QuiverMismatch("direct sum of representations of different quivers")
        return Representation(
            self.quiver,
            (self.dim + other.dim).as_dimension_vector(),
            tuple(
                a.block_diagonal(b)
                for a, b in zip(self.maps, other.maps, strict=True)
            ),
        )


@dataclass(frozen=True)
class GroupElement:
    """An element of GL(d): one invertible block per vertex.

    Attributes:
        quiver: The quiver.
        dim: Dimension vector d.
        blocks: Per vertex, an invertible d(x) x d(x) matrix.
    """

    quiver: Quiver
    dim: DimensionVector
    blocks: tuple[ExactMatrix, ...]

    def __post_init__(self) -> None:  # noqa: D105
        if len(self.blocks) != self.quiver.n:
            raise SingularBlock(
                f"{len(self.blocks)} blocks for {self.quiver.n} vertices"
            )
        for x, block in enumerate(self.blocks):
            if block.shape != (self.dim[x], self.dim[x]) or block.is_singular():
                raise SingularBlock(
                    f"block at {self.quiver.vertices[x]} is not an invertible "
                    f"{self.dim[x]}x{self.dim[x]} matrix"
                )

    @classmethod
    def identity(cls, q: Quiver, dim: DimensionVector) -> GroupElement:  # noqa: D102
        return cls(q, dim, tuple(ExactMatrix.identity(k) for k in dim))

    @classmethod
    def scalars(
        cls, q: Quiver, dim: DimensionVector, values: Sequence[int | Fraction]
    ) -> GroupElement:
        """The element acting by the scalar `values[x]` at each vertex x."""
        blocks = tuple(
            ExactMatrix.diagonal([v] * k) for v, k in zip(values, dim, strict=True)
        )
        return cls(q, dim, blocks)

    def inverse(self) -> GroupElement:
        """The inverse element, blockwise."""
        blocks = tuple(b.inverse() for b in self.blocks)
        return GroupElement(self.quiver, self.dim, blocks)


def act(g: GroupElement, w: Representation) -> Representation:
    """Return g.W with (g.W)(a) = g(ha) W(a) g(ta)^-1.

    Raises:
        QuiverMismatch: If `g` and `w` do not share quiver and dimension vector.
    """
    if g.quiver != w.quiver or g.dim != w.dim:
        raise QuiverMismatch("group element and representation do not match")
    inverses = [b.inverse() for b in g.blocks]
    return Representation(
        w.quiver,
        w.dim,
        tuple(
            g.blocks[arrow.head] @ matrix @ inverses[arrow.tail]
            for arrow, matrix in zip(w.quiver.arrows, w.maps, strict=True)
        ),
    )


def character_value(g: GroupElement, s: IntVector) -> Fraction:
    """Evaluate prod_x det(g(x))^s(x).

    Raises:
        QuiverMismatch: If `s` is not indexed by the vertices.
    """
    if len(s) != g.quiver.n:
        raise QuiverMismatch(f"weight of length {len(s)} for {g.quiver.n} vertices")
    powers = (b.det() ** e for b, e in zip(g.blocks, s, strict=True))
    return prod(powers, start=Fraction(1))
