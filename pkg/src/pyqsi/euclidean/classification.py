"""Classification of the underlying graph of a quiver.

The class is decided by the symmetric Gram matrix of the Tits form: positive
definite means Dynkin, positive semi-definite with a one dimensional radical means
Euclidean, anything else is wild. The diagram type (A~n, D~n, E~6, ...) is then read
off the shape of the underlying multigraph.

Classes:
    GraphKind: Dynkin, Euclidean or Wild.
    GraphClass: The kind together with the diagram type.

Functions:
    classify_graph: Classify the underlying graph of a quiver.
    tits_gram_matrix: Symmetric matrix of the Tits quadratic form.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pyqsi.quiver.quiver import Quiver

# ✅ Standard library imports
from dataclasses import dataclass
from enum import Enum
import logging

# ✅ Third-party imports
import networkx as nx
import sympy

# ✅ Local imports
from pyqsi.exceptions.structure_error import StructureCheckFailed

logger = logging.getLogger(__name__)


class GraphKind(Enum):
    """Representation type of the underlying graph."""

    DYNKIN = "Dynkin"
    EUCLIDEAN = "Euclidean"
    WILD = "Wild"


@dataclass(frozen=True)
class GraphClass:
    """Classification of the underlying graph of a quiver.

    Attributes:
        kind: Dynkin, Euclidean or Wild.
        type: Diagram name such as `"A~1"`, `"D~4"`, `"E~6"` for Euclidean graphs or
            `"A2"`, `"D5"`, `"E8"` for Dynkin graphs; `None` for wild graphs.
    """

    kind: GraphKind
    type: str | None = None

    @property
    def is_euclidean(self) -> bool:  # noqa: D102
        return self.kind is GraphKind.EUCLIDEAN

    def to_dict(self) -> dict[str, str | None]:
        """JSON-ready form `{"class": ..., "type": ...}`."""
        return {"class": self.kind.value, "type": self.type}

    def __str__(self) -> str:  # noqa: D105
        if self.type is None:
            return self.kind.value
        return f"{self.kind.value} {self.type}"


def tits_gram_matrix(q: Quiver) -> sympy.Matrix:
    """Return the symmetric matrix G with a^T G a = 2 q(a).

    The diagonal is 2 and entry (x, y) is minus the number of arrows between
    `x` and `y` in either direction.
    """
    gram = sympy.eye(q.n) * 2
    for arrow in q.arrows:
        gram[arrow.tail, arrow.head] -= 1
        gram[arrow.head, arrow.tail] -= 1
    return gram


def _arm_lengths(graph: nx.MultiGraph, center: int) -> list[int]:
    rest = graph.copy()
    rest.remove_node(center)
    return sorted(len(c) for c in nx.connected_components(rest))


def _diagram_type(graph: nx.MultiGraph) -> tuple[GraphKind, str] | None:
    """Match the underlying multigraph against the ADE and extended ADE diagrams."""
    n = graph.number_of_nodes()
    degrees = dict(graph.degree())
    if n >= 2 and all(d == 2 for d in degrees.values()):
        return GraphKind.EUCLIDEAN, f"A~{n - 1}"
    if graph.number_of_edges() != n - 1:
        return None
    branch = [v for v, d in degrees.items() if d >= 3]

    if not branch:
        return GraphKind.DYNKIN, f"A{n}"
    if len(branch) == 1 and degrees[branch[0]] == 4:
        if _arm_lengths(graph, branch[0]) == [1, 1, 1, 1]:
            return GraphKind.EUCLIDEAN, "D~4"
        return None
    if len(branch) == 1 and degrees[branch[0]] == 3:
        arms = tuple(_arm_lengths(graph, branch[0]))
        euclidean = {(2, 2, 2): "E~6", (1, 3, 3): "E~7", (1, 2, 5): "E~8"}
        if arms in euclidean:
            return GraphKind.EUCLIDEAN, euclidean[arms]
        if arms[:2] == (1, 1):
            return GraphKind.DYNKIN, f"D{n}"
        if arms in {(1, 2, 2), (1, 2, 3), (1, 2, 4)}:
            return GraphKind.DYNKIN, f"E{n}"
        return None
    if len(branch) == 2 and all(degrees[v] == 3 for v in branch):
        leaves = [v for v, d in degrees.items() if d == 1]
        if len(leaves) == 4 and all(
            any(graph.has_edge(leaf, b) for b in branch) for leaf in leaves
        ):
            return GraphKind.EUCLIDEAN, f"D~{n - 1}"
    return None


def classify_graph(q: Quiver) -> GraphClass:
    """Classify the underlying graph of `q` as Dynkin, Euclidean or Wild.

    Args:
        q: A validated quiver.

    Returns:
        The graph class; Euclidean and Dynkin results carry the diagram type.

    Raises:
        StructureCheckFailed: If the definiteness test and the diagram shape disagree.
    """
    gram = tits_gram_matrix(q)
    if gram.is_positive_definite:
        kind = GraphKind.DYNKIN
    elif gram.is_positive_semidefinite and q.n - gram.rank() == 1:
        kind = GraphKind.EUCLIDEAN
    else:
        logger.info(f"Quiver {list(q.vertices)} is wild")
        return GraphClass(GraphKind.WILD)

    matched = _diagram_type(q.to_multigraph())
    if matched is None or matched[0] is not kind:
        raise StructureCheckFailed(
            f"Tits form says {kind.value} but the diagram shape gives {matched}"
        )
    result = GraphClass(*matched)
    logger.info(f"Quiver {list(q.vertices)} classified as {result}")
    return result
