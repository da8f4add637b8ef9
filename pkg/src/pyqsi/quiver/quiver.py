"""Quiver data model and validation.

A quiver is a finite connected directed graph without oriented cycles. After
validation its vertices are re-indexed densely in a topological order, so every
arrow satisfies `tail < head`; all math in the library uses these dense indices
and the original ids survive as labels.

Classes:
    Arrow: A named arrow between two dense vertex indices.
    Quiver: Validated, immutable quiver.

Functions:
    validate_quiver: Build a Quiver from a raw vertex/arrow description.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from collections.abc import Mapping

# ✅ Standard library imports
import logging
from dataclasses import dataclass
from functools import cached_property

# ✅ Third-party imports
import networkx as nx

# ✅ Local imports
from pyqsi.exceptions.quiver_error import (
    CyclicQuiver,
    Disconnected,
    DuplicateId,
    IndexMismatch,
    QuiverFormatError,
)
from pyqsi.quiver.vectors import DimensionVector, IntVector, Weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
    """An arrow `tail -> head` between dense vertex indices.

    Attributes:
        id: The arrow id as given in the input.
        tail: Dense index of the tail vertex.
        head: Dense index of the head vertex.
    """

    id: str
    tail: int
    head: int


@dataclass(frozen=True)
class Quiver:
    """Validated quiver with vertices in topological order.

    Use [validate_quiver][pyqsi.quiver.validate_quiver] to build one from raw data;
    the constructor trusts its input.

    Attributes:
        vertices: Vertex labels, position = dense index, in topological order.
        arrows: Arrows in input order, referring to dense indices.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.vertices)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.vertices)}

    def index_of(self, label: str) -> int:
        """Dense index of the vertex labelled `label`."""
        try:
            return self._index[label]
        except KeyError:
            raise QuiverFormatError(f"unknown vertex {label!r}") from None

    def arrows_into(self, x: int) -> tuple[Arrow, ...]:
        """Arrows with head `x`, counted with multiplicity."""
        return tuple(a for a in self.arrows if a.head == x)

    def arrows_out_of(self, x: int) -> tuple[Arrow, ...]:
        """Arrows with tail `x`, counted with multiplicity."""
        return tuple(a for a in self.arrows if a.tail == x)

    def check(self, v: IntVector) -> None:
        """Raise IndexMismatch unless `v` has one entry per vertex."""
        if len(v) != self.n:
            raise IndexMismatch(expected=self.n, got=len(v))

    ########## Label mapping ##########

    def _values_from_mapping(self, mapping: Mapping[str, int]) -> tuple[int, ...]:
        missing = set(self.vertices) - set(mapping)
        unknown = set(mapping) - set(self.vertices)
        if missing or unknown:
            raise QuiverFormatError(
                f"vector labels do not match the quiver "
                f"(missing: {sorted(missing)}, unknown: {sorted(unknown)})"
            )
        values = []
        for label in self.vertices:
            value = mapping[label]
            if isinstance(value, bool) or not isinstance(value, int):
                raise QuiverFormatError(f"entry for {label!r} is not an integer")
            values.append(value)
        return tuple(values)

    def vector_from_mapping(self, mapping: Mapping[str, int]) -> DimensionVector:
        """Convert a `{label: value}` mapping into a dimension vector.

        Every vertex must be present and no unknown label is allowed.

        Raises:
            QuiverFormatError: If labels are missing, unknown, or values not integers.
            ValueError: If a value is negative.
        """
        return DimensionVector(self._values_from_mapping(mapping))

    def weight_from_mapping(self, mapping: Mapping[str, int]) -> Weight:
        """Convert a `{label: value}` mapping into a weight."""
        return Weight(self._values_from_mapping(mapping))

    def vector_to_mapping(self, v: IntVector) -> dict[str, int]:
        """Convert a dense vector into a `{label: value}` mapping in vertex order."""
        self.check(v)
        return {label: v[i] for i, label in enumerate(self.vertices)}

    def dimension_vector(self, *values: int) -> DimensionVector:
        """Dimension vector from entries listed in dense vertex order."""
        v = DimensionVector(tuple(values))
        self.check(v)
        return v

    def weight(self, *values: int) -> Weight:
        """Weight from entries listed in dense vertex order."""
        w = Weight(tuple(values))
        self.check(w)
        return w

    ########## Graph views ##########

    def to_multigraph(self) -> nx.MultiGraph:
        """Underlying undirected multigraph on the dense indices."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((a.tail, a.head) for a in self.arrows)
        return graph

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready description using the original ids."""
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {
                    "id": a.id,
                    "tail": self.vertices[a.tail],
                    "head": self.vertices[a.head],
                }
                for a in self.arrows
            ],
        }


def validate_quiver(raw: Mapping[str, Any]) -> Quiver:
    """Validate a raw vertex/arrow description and build a Quiver.

    The raw description follows the JSON interface:
    `{"vertices": ["1", "2"], "arrows": [{"id": "a", "tail": "1", "head": "2"}]}`.
    Vertices are re-indexed in a topological order; ties are broken by the input
    order so the result is deterministic.

    Args:
        raw: Mapping with a `vertices` list and an `arrows` list.

    Returns:
        The validated quiver.

    Raises:
        QuiverFormatError: If the description is malformed.
        DuplicateId: If a vertex or arrow id repeats.
        CyclicQuiver: If the arrows contain a directed cycle.
        Disconnected: If the underlying graph is not connected.
    """
    try:
        vertices = [str(v) for v in raw["vertices"]]
        arrows = [(str(a["id"]), str(a["tail"]), str(a["head"])) for a in raw["arrows"]]
    except (KeyError, TypeError) as e:
        raise QuiverFormatError(f"malformed quiver description: {e!r}") from e

    if not vertices:
        raise QuiverFormatError("a quiver needs at least one vertex")
    if len(set(vertices)) != len(vertices):
        raise DuplicateId(f"duplicate vertex id in {vertices}")
    arrow_ids = [a[0] for a in arrows]
    if len(set(arrow_ids)) != len(arrow_ids):
        raise DuplicateId(f"duplicate arrow id in {arrow_ids}")

    graph = nx.MultiDiGraph()
    graph.add_nodes_from(vertices)
    for arrow_id, tail, head in arrows:
        if tail not in graph or head not in graph:
            raise QuiverFormatError(f"arrow {arrow_id!r} uses an unknown vertex")
        graph.add_edge(tail, head, key=arrow_id)

    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph, orientation="original")
        raise CyclicQuiver([key for _, _, key, _ in cycle])
    if not nx.is_weakly_connected(graph):
        parts = [sorted(c) for c in nx.weakly_connected_components(graph)]
        raise Disconnected(f"underlying graph has components {parts}")

    position = {v: i for i, v in enumerate(vertices)}
    order = list(nx.lexicographical_topological_sort(graph, key=position.__getitem__))
    index = {v: i for i, v in enumerate(order)}
    quiver = Quiver(
        vertices=tuple(order),
        arrows=tuple(Arrow(a, index[t], index[h]) for a, t, h in arrows),
    )
    logger.debug(f"Validated quiver with {quiver.n} vertices in order {order}")
    return quiver
