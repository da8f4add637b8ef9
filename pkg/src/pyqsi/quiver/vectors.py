"""Integer vectors indexed by the vertices of a quiver.

Vectors are stored densely, in the topological vertex order fixed by the
[Quiver][pyqsi.quiver.Quiver] they belong to. Labels only appear at the I/O
boundary (see `Quiver.vector_from_mapping` and `Quiver.vector_to_mapping`).

Classes:
    IntVector: Arbitrary integer vector (results of Coxeter transforms, differences).
    DimensionVector: Nonnegative integer vector.
    Weight: Integer vector used as a weight (character exponent) of GL(d).

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

# ✅ Standard library imports
from dataclasses import dataclass
from functools import total_ordering

# ✅ Local imports
from pyqsi.exceptions.quiver_error import IndexMismatch


@total_ordering
@dataclass(frozen=True, eq=False)
class IntVector:
    """Immutable integer vector in the dense vertex order of a quiver.

    Equality, hashing and ordering only look at the entries, so a
    `DimensionVector` compares equal to an `IntVector` with the same entries.
    Ordering is lexicographic.

    Attributes:
        entries: The integer entries, one per vertex.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:  # noqa: D105
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @classmethod
    def of(cls, *values: int) -> IntVector:
        """Build a vector from its entries given as arguments."""
        return cls(tuple(values))

    @classmethod
    def zero(cls, n: int) -> IntVector:
        """Return the zero vector with `n` entries."""
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> IntVector:
        """Return the `i`-th unit vector with `n` entries."""
        return cls(tuple(1 if k == i else 0 for k in range(n)))

    ########## Sequence protocol ##########

    def __len__(self) -> int:  # noqa: D105
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:  # noqa: D105
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:  # noqa: D105
        return self.entries[i]

    ########## Comparison ##########

    def __eq__(self, other: object) -> bool:  # noqa: D105
        if isinstance(other, IntVector):
            return self.entries == other.entries
        return NotImplemented

    def __lt__(self, other: IntVector) -> bool:  # noqa: D105
        return self.entries < other.entries

    def __hash__(self) -> int:  # noqa: D105
        return hash(self.entries)

    def __repr__(self) -> str:  # noqa: D105
        return f"{type(self).__name__}{self.entries}"

    ########## Arithmetic ##########

    def _check(self, other: IntVector) -> None:
        if len(other) != len(self):
            raise IndexMismatch(expected=len(self), got=len(other))

    def __add__(self, other: IntVector) -> IntVector:  # noqa: D105
        self._check(other)
        return IntVector(tuple(a + b for a, b in zip(self, other, strict=True)))

    def __sub__(self, other: IntVector) -> IntVector:  # noqa: D105
        self._check(other)
        return IntVector(tuple(a - b for a, b in zip(self, other, strict=True)))

    def __neg__(self) -> IntVector:  # noqa: D105
        return IntVector(tuple(-a for a in self))

    def __mul__(self, k: int) -> IntVector:  # noqa: D105
        return IntVector(tuple(k * a for a in self))

    __rmul__ = __mul__

    def dot(self, other: IntVector) -> int:
        """Return the coordinate pairing sum_x self(x) other(x)."""
        self._check(other)
        return sum(a * b for a, b in zip(self, other, strict=True))

    def is_nonnegative(self) -> bool:
        """Whether every entry is at least zero."""
        return all(a >= 0 for a in self)

    def is_zero(self) -> bool:  # noqa: D102
        return not any(self.entries)

    def leq(self, other: IntVector) -> bool:
        """Componentwise comparison self <= other."""
        self._check(other)
        return all(a <= b for a, b in zip(self, other, strict=True))

    def as_dimension_vector(self) -> DimensionVector:
        """Reinterpret as a dimension vector (raises if an entry is negative)."""
        return DimensionVector(self.entries)

    def as_weight(self) -> Weight:
        """Reinterpret as a weight."""
        return Weight(self.entries)


class DimensionVector(IntVector):
    """Nonnegative integer vector: the dimension vector of a representation."""

    def __post_init__(self) -> None:  # noqa: D105
        super().__post_init__()
        if any(x < 0 for x in self.entries):
            raise ValueError(
                f"dimension vector entries must be >= 0, got {self.entries}"
            )

    def total(self) -> int:
        """Total dimension sum_x d(x)."""
        return sum(self.entries)


class Weight(IntVector):
    """Weight sigma: Q_0 -> Z.

    The exponents of the character prod det(g(x))^sigma(x).
    """


def vector_sum(vectors: Iterable[IntVector], n: int) -> IntVector:
    """Sum an iterable of vectors with `n` entries (the empty sum is zero)."""
    total = IntVector.zero(n)
    for v in vectors:
        total = total + v
    return total
