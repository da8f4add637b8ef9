"""Quiver and dimension vector file parsing.

Functions:
    load_quiver: Load and validate a quiver from a JSON file or mapping.
    load_dimension_vector: Load a dimension vector from a JSON file, inline JSON
        text or mapping.
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from pyqsi.quiver.quiver import Quiver
    from pyqsi.quiver.vectors import DimensionVector

# ✅ Standard library imports
import json
import logging
from pathlib import Path

# ✅ Local imports
from pyqsi.exceptions.quiver_error import QuiverFormatError
from pyqsi.quiver.quiver import validate_quiver

logger = logging.getLogger(__name__)


def _read_json(source: str | Path) -> Any:
    """Read JSON from a file path, or from inline text starting with `{`.

    Raises:
        QuiverFormatError: If the file is missing or the JSON is malformed.
    """
    text = str(source).strip()
    if isinstance(source, str) and text.startswith("{"):
        origin = "inline JSON"
    else:
        path = Path(source)
        origin = str(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise QuiverFormatError(f"cannot read {path}: {e.strerror}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise QuiverFormatError(f"malformed JSON in {origin}: {e.msg}") from e


def load_quiver(source: str | Path | dict[str, Any]) -> Quiver:
    """Load a quiver description and validate it.

    Args:
        source: Path to a JSON file, or an already decoded mapping.

    Returns:
        The validated quiver.

    Raises:
        QuiverFormatError: If the file cannot be read or is not a quiver description.
        QuiverError: Any validation error raised by `validate_quiver`.

    Example File Format:
        {"vertices": ["1", "2"],
         "arrows": [{"id": "a", "tail": "1", "head": "2"},
                    {"id": "b", "tail": "1", "head": "2"}]}
    """
    raw = source if isinstance(source, dict) else _read_json(source)
    if not isinstance(raw, dict):
        raise QuiverFormatError("a quiver description must be a JSON object")
    quiver = validate_quiver(raw)
    logger.debug(
        f"Loaded quiver {list(quiver.vertices)} with {len(quiver.arrows)} arrows"
    )
    return quiver


def load_dimension_vector(
    q: Quiver, source: str | Path | dict[str, Any]
) -> DimensionVector:
    """Load a dimension vector `{"vertex": value, ...}` for the quiver `q`.

    Args:
        q: The quiver the vector is indexed by.
        source: Path to a JSON file, inline JSON text such as `{"1": 1, "2": 1}`,
            or a decoded mapping.

    Raises:
        QuiverFormatError: If the input cannot be read, labels do not match the
            vertices of `q`, or an entry is negative or not an integer.
    """
    raw = source if isinstance(source, dict) else _read_json(source)
    if not isinstance(raw, dict):
        raise QuiverFormatError("a dimension vector must be a JSON object")
    try:
        return q.vector_from_mapping({str(k): v for k, v in raw.items()})
    except ValueError as e:
        raise QuiverFormatError(str(e)) from e
