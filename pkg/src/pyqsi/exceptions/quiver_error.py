"""Errors raised while building quivers and evaluating forms on them.

**Authors**: SDU
"""

# ✅ Local imports
from pyqsi.exceptions.qsi_error import QsiError


class QuiverError(QsiError):
    """Base class for problems with a quiver or with vectors indexed by it."""


class CyclicQuiver(QuiverError):  # noqa: N818
    """The arrows of the quiver contain a directed cycle."""

    def __init__(self, cycle: list[str]) -> None:
        """The arrows of the quiver contain a directed cycle.

        Args:
            cycle (list[str]): Ids of the arrows forming the cycle, in order.

        """
        super().__init__(f"directed cycle through arrows {', '.join(cycle)}")
        self.cycle: list[str] = cycle


class Disconnected(QuiverError):  # noqa: N818
    """The underlying undirected graph has more than one component."""


class DuplicateId(QuiverError):  # noqa: N818
    """A vertex or arrow id is used twice."""


class IndexMismatch(QuiverError):  # noqa: N818
    """A vector is not indexed by the vertex set of the quiver it is used with."""

    def __init__(self, expected: int, got: int) -> None:
        """A vector is not indexed by the vertex set of the quiver.

        Args:
            expected (int): Number of vertices of the quiver.
            got (int): Length of the offending vector.

        """
        super().__init__(f"expected a vector with {expected} entries, got {got}")
        self.expected: int = expected
        self.got: int = got


class QuiverFormatError(QuiverError):
    """A quiver or dimension vector file could not be understood."""
