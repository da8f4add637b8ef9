"""Errors raised by the exact linear algebra and Schofield machinery.

**Authors**: SDU
"""

# ✅ Local imports
from pyqsi.exceptions.qsi_error import QsiError


class LinearAlgebraError(QsiError):
    """Base class for errors of the exact linear algebra layer."""


class NotSquare(LinearAlgebraError):  # noqa: N818
    """A determinant was requested for a non-square matrix."""

    def __init__(self, rows: int, cols: int) -> None:
        """A determinant was requested for a non-square matrix.

        Args:
            rows (int): Number of rows of the matrix.
            cols (int): Number of columns of the matrix.

        """
        super().__init__(f"matrix of shape {rows}x{cols} is not square")
        self.shape: tuple[int, int] = (rows, cols)


class NotOrthogonal(LinearAlgebraError):  # noqa: N818
    """The Euler form of the two dimension vectors is not zero."""


class QuiverMismatch(LinearAlgebraError):  # noqa: N818
    """Two representations (or a group element) live on different quivers."""


class SingularBlock(LinearAlgebraError):  # noqa: N818
    """A block of a group element is not invertible or has the wrong size."""
