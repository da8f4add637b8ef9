"""Errors raised for dimension vectors outside the regular cone.

**Authors**: SDU
"""

# ✅ Local imports
from pyqsi.exceptions.qsi_error import QsiError


class RegularityError(QsiError):
    """Base class for errors about the regularity of a dimension vector."""


class NotRegular(RegularityError):  # noqa: N818
    """The dimension vector has no canonical decomposition into regular summands."""


class DenseOrbitCase(RegularityError):  # noqa: N818
    """The representation space has a dense orbit (p = 0); no generators are built."""
