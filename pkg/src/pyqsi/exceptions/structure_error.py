"""Errors raised by the Euclidean structure computations.

**Authors**: SDU
"""

# ✅ Local imports
from pyqsi.exceptions.qsi_error import QsiError


class StructureError(QsiError):
    """Base class for errors about the root structure of a quiver."""


class NotEuclidean(StructureError):  # noqa: N818
    """The operation needs a Euclidean (extended Dynkin) quiver."""


class StructureCheckFailed(StructureError):  # noqa: N818
    """A computed orbit family violates one of its invariants.

    This signals an enumeration bug or corrupted input data, never a bad quiver.
    """
