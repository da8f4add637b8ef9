"""Base class of every error raised by pyqsi.

**Authors**: SDU
"""


class QsiError(Exception):
    """Base class for all errors raised by the library."""

    def __init__(self, message: str) -> None:
        """Base class for all errors raised by the library.

        Args:
            message (str): Human readable description of the problem.

        """
        super().__init__(message)
        self.message: str = message

    def __str__(self) -> str:  # noqa: D105
        return f"{type(self).__name__}: {self.message}"
