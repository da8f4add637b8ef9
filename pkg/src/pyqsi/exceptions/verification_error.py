"""Errors raised by the randomized verification harness.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import Any

# ✅ Local imports
from pyqsi.exceptions.qsi_error import QsiError


class VerificationError(QsiError):
    """Base class for errors of the verification harness.

    A check that does not hold raises a subclass; the harness turns it into a
    failed check result that keeps the witnesses.
    """

    def __init__(self, message: str, witnesses: dict[str, Any] | None = None) -> None:
        """Base class for errors of the verification harness.

        Args:
            message (str): Human readable description of the failure.
            witnesses (dict | None): Data needed to replay the failing check.

        """
        super().__init__(message)
        self.witnesses: dict[str, Any] = dict(witnesses or {})


class CertificationFailed(VerificationError):  # noqa: N818
    """No Schur sample was found within the retry limit."""


class SpanMismatch(VerificationError):  # noqa: N818
    """Evaluated semi-invariants do not span the predicted space."""
