"""pyqsi exceptions module.

This module contains all custom exceptions of the pyqsi library. Every error derives
from [QsiError][pyqsi.exceptions.QsiError] so callers can catch the whole family at
once, e.g. the command line front end maps it to exit code 1.

**Authors**: SDU
"""

# ✅ Local imports
from .linear_algebra_error import (
    LinearAlgebraError,
    NotOrthogonal,
    NotSquare,
    QuiverMismatch,
    SingularBlock,
)
from .qsi_error import QsiError
from .quiver_error import (
    CyclicQuiver,
    Disconnected,
    DuplicateId,
    IndexMismatch,
    QuiverError,
    QuiverFormatError,
)
from .regularity_error import DenseOrbitCase, NotRegular, RegularityError
from .structure_error import NotEuclidean, StructureCheckFailed, StructureError
from .verification_error import CertificationFailed, SpanMismatch, VerificationError

__all__ = [
    "CertificationFailed",
    "CyclicQuiver",
    "DenseOrbitCase",
    "Disconnected",
    "DuplicateId",
    "IndexMismatch",
    "LinearAlgebraError",
    "NotEuclidean",
    "NotOrthogonal",
    "NotRegular",
    "NotSquare",
    "QsiError",
    "QuiverError",
    "QuiverFormatError",
    "QuiverMismatch",
    "RegularityError",
    "SingularBlock",
    "SpanMismatch",
    "StructureCheckFailed",
    "StructureError",
    "VerificationError",
]
