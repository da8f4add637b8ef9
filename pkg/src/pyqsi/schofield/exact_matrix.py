"""Exact rational matrices.

Entries are `fractions.Fraction`. Determinants and ranks are computed by sympy's
`DomainMatrix`: each row is cleared of denominators, the determinant over ZZ uses
fraction-free (Bareiss) elimination and is divided back by the row scales.

An optional prime `modulus` screens a computation over GF(p) first. A full rank
or nonzero determinant modulo p is already certain over Q; only a rank drop or
zero determinant is recomputed exactly.

Classes:
    ExactMatrix: Immutable rational matrix.

Functions:
    det_exact: Exact determinant.
    rank_exact: Exact rank.
    kernel_dim: Dimension of the right kernel.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

# ✅ Standard library imports
from dataclasses import dataclass
from fractions import Fraction
import logging
from math import lcm, prod

# ✅ Third-party imports
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

# ✅ Local imports
from pyqsi.exceptions.linear_algebra_error import NotSquare, SingularBlock

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable rows x cols matrix of exact rationals, stored row-major.

    Attributes:
        rows: Number of rows.
        cols: Number of columns.
        entries: Row-major entries, `rows * cols` of them.
    """

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:  # noqa: D105
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries do not fill a "
                f"{self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))

    ########## Constructors ##########

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int | Fraction]], cols: int | None = None
    ) -> ExactMatrix:
        """Build a matrix from a list of rows; `cols` is needed for zero rows."""
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != width for r in rows):
            raise ValueError("rows of unequal length")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:  # noqa: D102
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:  # noqa: D102
        return cls(
            n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n))
        )

    @classmethod
    def diagonal(cls, values: Iterable[int | Fraction]) -> ExactMatrix:
        """Square matrix with `values` on the diagonal."""
        values = list(values)
        n = len(values)
        entries = tuple(values[i] if i == j else 0 for i in range(n) for j in range(n))
        return cls(n, n, entries)

    ########## Access ##########

    @property
    def shape(self) -> tuple[int, int]:  # noqa: D102
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:  # noqa: D105
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:  # noqa: D102
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:  # noqa: D102
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:  # noqa: D105
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if 0 in (self.rows, self.cols, other.cols):
            return ExactMatrix.zeros(self.rows, other.cols)
        product = self._rational().matmul(other._rational()).to_Matrix()
        return ExactMatrix(
            self.rows,
            other.cols,
            tuple(Fraction(int(x.p), int(x.q)) for x in product),
        )

    def block_diagonal(self, other: ExactMatrix) -> ExactMatrix:
        """The block matrix [[self, 0], [0, other]]."""
        rows = [list(r) + [0] * other.cols for r in self.to_rows()]
        rows += [[0] * self.cols + list(r) for r in other.to_rows()]
        return ExactMatrix.from_rows(rows, cols=self.cols + other.cols)

    ########## Domain matrices ##########

    def _integer_rows(self) -> tuple[DomainMatrix, int]:
        """Rows scaled to integers over ZZ, with the product of the row scales."""
        scales = [lcm(*(x.denominator for x in self.row(i))) for i in range(self.rows)]
        rows = [
            [ZZ(int(x * scale)) for x in self.row(i)] for i, scale in enumerate(scales)
        ]
        return DomainMatrix(rows, self.shape, ZZ), prod(scales)

    def _rational(self) -> DomainMatrix:
        return DomainMatrix(
            [
                [QQ(x.numerator, x.denominator) for x in self.row(i)]
                for i in range(self.rows)
            ],
            self.shape,
            QQ,
        )

    def _screen(self, modulus: int) -> DomainMatrix:
        return self._integer_rows()[0].convert_to(GF(modulus))

    ########## Main Methods ##########

    def det(self) -> Fraction:
        """Exact determinant (1 for the empty matrix).

        Raises:
            NotSquare: If the matrix is not square.
        """
        if self.rows != self.cols:
            raise NotSquare(self.rows, self.cols)
        if self.rows == 0:
            return Fraction(1)
        matrix, scale = self._integer_rows()
        return Fraction(int(matrix.det()), scale)

    def is_singular(self, modulus: int | None = None) -> bool:
        """Whether the determinant is zero, screened modulo `modulus` when given.

        Raises:
            NotSquare: If the matrix is not square.
        """
        if self.rows != self.cols:
            raise NotSquare(self.rows, self.cols)
        if self.rows == 0:
            return False
        if modulus is not None:
            screened = self._screen(modulus)
            if not screened.domain.is_zero(screened.det()):
                return False
            logger.debug(f"Zero determinant modulo {modulus}, confirming over ZZ")
        return self._integer_rows()[0].det() == 0

    def rank(self, modulus: int | None = None) -> int:
        """Exact rank, screened modulo `modulus` when given."""
        if self.rows == 0 or self.cols == 0:
            return 0
        if modulus is not None:
            screened = self._screen(modulus).rank()
            if screened == min(self.rows, self.cols):
                return screened
            logger.debug(
                f"Rank {screened} modulo {modulus} is not full, confirming over QQ"
            )
        return self._integer_rows()[0].to_field().rank()

    def det_mod(self, modulus: int) -> int:
        """Determinant of the integer-scaled matrix modulo `modulus`, in [0, modulus).

        Only meaningful for integer matrices, where no row is scaled.
        """
        if self.rows != self.cols:
            raise NotSquare(self.rows, self.cols)
        if self.rows == 0:
            return 1
        screened = self._screen(modulus)
        return int(screened.domain.to_sympy(screened.det())) % modulus

    def rank_mod(self, modulus: int) -> int:
        """Rank over GF(modulus), a lower bound for the rank over Q."""
        if self.rows == 0 or self.cols == 0:
            return 0
        return self._screen(modulus).rank()

    def kernel_dim(self, modulus: int | None = None) -> int:
        """Dimension of {x : M x = 0}."""
        return self.cols - self.rank(modulus=modulus)

    def inverse(self) -> ExactMatrix:
        """Exact inverse.

        Raises:
            SingularBlock: If the matrix is not square or not invertible.
        """
        if self.rows != self.cols or self.is_singular():
            raise SingularBlock(f"matrix of shape {self.shape} is not invertible")
        if self.rows == 0:
            return self
        inverse = self._rational().inv().to_Matrix()
        return ExactMatrix(
            self.rows, self.cols, tuple(Fraction(int(x.p), int(x.q)) for x in inverse)
        )


def det_exact(m: ExactMatrix) -> Fraction:
    """Exact determinant of a square matrix (1 for the empty matrix).

    Raises:
        NotSquare: If `m` is not square.
    """
    return m.det()


def rank_exact(m: ExactMatrix, modulus: int | None = None) -> int:
    """Exact rank of `m`."""
    return m.rank(modulus=modulus)


def kernel_dim(m: ExactMatrix, modulus: int | None = None) -> int:
    """Dimension of the right kernel of `m`."""
    return m.kernel_dim(modulus=modulus)
