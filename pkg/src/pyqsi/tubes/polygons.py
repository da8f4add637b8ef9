"""Labeled polygons and their arcs.

Each orbit family of size u is drawn as a u-gon. Vertex k carries the label p_k of
the canonical decomposition and the edge from vertex k to vertex k+1 (mod u)
carries the simple regular e_k. An arc [s, t] walks clockwise from s to t and
covers the edges e_s, ..., e_{t-1}; it stands for the uniserial regular module
E_{t-1,s} with top e_s and socle e_{t-1}.

Classes:
    Arc: A clockwise arc [s, t] of one polygon.
    LabeledPolygon: A family together with its labels.

Functions:
    labeled_polygons: The polygons of a canonical decomposition.
    admissible_arcs: Arcs with equal extreme labels and larger interior labels.
    equal_label_arcs: Arcs with equal extreme labels that are not admissible.
    arc_generator_data: Name, dimension vector and weight of an arc generator.
    min_level_partition: Arcs between consecutive zero labels.
    arc_hom_nonzero: Whether Hom between two arc modules of one tube is nonzero.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pyqsi.euclidean.structure import EuclideanStructure
    from pyqsi.tubes.decomposition import CanonicalDecomposition

# ✅ Standard library imports
from dataclasses import dataclass
import logging

# ✅ Local imports
from pyqsi.constants import Constants
from pyqsi.quiver.forms import weight_of_left_form
from pyqsi.quiver.vectors import DimensionVector, Weight, vector_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arc:
    """A clockwise arc [start, end] on a u-gon of one family.

    Attributes:
        family: Index of the orbit family.
        start: Start vertex s.
        end: End vertex t.
        u: Number of vertices of the polygon.
    """

    family: int
    start: int
    end: int
    u: int

    def __post_init__(self) -> None:  # noqa: D105
        if self.u < 2 or not (0 <= self.start < self.u and 0 <= self.end < self.u):
            raise ValueError(
                f"arc [{self.start},{self.end}] does not fit a {self.u}-gon"
            )
        if self.start == self.end:
            raise ValueError("arcs of length 0 or u are not arcs")

    @property
    def length(self) -> int:
        """Number of edges L = (t - s) mod u, between 1 and u - 1."""
        return (self.end - self.start) % self.u

    @property
    def edges(self) -> tuple[int, ...]:
        """Indices of the edges e_s, ..., e_{t-1}."""
        return tuple((self.start + k) % self.u for k in range(self.length))

    @property
    def interior(self) -> tuple[int, ...]:
        """Vertices strictly between s and t."""
        return tuple((self.start + k) % self.u for k in range(1, self.length))

    @property
    def socle(self) -> int:
        """Index of the socle e_{t-1}."""
        return (self.end - 1) % self.u

    @property
    def id(self) -> str:
        """Stable id `E:<family>:<start>:<end>`."""
        sep = Constants.ID_SEPARATOR
        parts = (Constants.ARC_PREFIX, str(self.family), str(self.start), str(self.end))
        return sep.join(parts)

    @property
    def name(self) -> str:
        """Display name such as `E_{0,3}` or `E'_{1,1}`."""
        marks = Constants.FAMILY_MARKS
        mark = marks[self.family] if self.family < len(marks) else "'" * self.family
        return f"{Constants.ARC_PREFIX}{mark}_{{{self.socle},{self.start}}}"

    @classmethod
    def from_id(cls, arc_id: str, u: int) -> Arc:
        """Parse an id produced by `Arc.id`."""
        prefix, family, start, end = arc_id.split(Constants.ID_SEPARATOR)
        if prefix != Constants.ARC_PREFIX:
            raise ValueError(f"{arc_id!r} is not an arc id")
        return cls(int(family), int(start), int(end), u)

    def sort_key(self) -> tuple[int, int, int]:
        """Family, then start vertex, then length."""
        return (self.family, self.start, self.length)


@dataclass(frozen=True)
class LabeledPolygon:
    """An orbit family drawn as a u-gon with its canonical labels.

    Attributes:
        family: Index of the orbit family.
        vectors: Edge vectors e_0, ..., e_{u-1} with <e_k, e_{k+1}> = -1.
        labels: Vertex labels p_0, ..., p_{u-1}.
    """

    family: int
    vectors: tuple[DimensionVector, ...]
    labels: tuple[int, ...]

    def __post_init__(self) -> None:  # noqa: D105
        if len(self.labels) != len(self.vectors) or len(self.labels) < 2:
            raise ValueError(
                f"a polygon needs u >= 2 matching labels, got {self.labels}"
            )
        if min(self.labels) != 0:
            raise ValueError(
                f"polygon labels must be >= 0 with minimum 0, got {self.labels}"
            )

    @property
    def u(self) -> int:  # noqa: D102
        return len(self.labels)

    def arc(self, start: int, end: int) -> Arc:
        """The arc [start, end] of this polygon."""
        return Arc(self.family, start, end, self.u)

    def all_arcs(self) -> list[Arc]:
        """Every arc with 1 <= L <= u - 1, by start vertex then length."""
        return [
            self.arc(s, (s + length) % self.u)
            for s in range(self.u)
            for length in range(1, self.u)
        ]

    def arc_dimension(self, arc: Arc) -> DimensionVector:
        """Sum of the edge vectors covered by `arc`."""
        n = len(self.vectors[0])
        return vector_sum((self.vectors[k] for k in arc.edges), n).as_dimension_vector()

    def is_admissible(self, arc: Arc) -> bool:
        """Equal extreme labels and strictly larger interior labels."""
        level = self.labels[arc.start]
        return self.labels[arc.end] == level and all(
            self.labels[k] > level for k in arc.interior
        )


def labeled_polygons(
    es: EuclideanStructure, cd: CanonicalDecomposition
) -> tuple[LabeledPolygon, ...]:
    """One labeled polygon per orbit family of `es`, labelled by `cd`."""
    return tuple(
        LabeledPolygon(family=f, vectors=es.oriented(f), labels=labels)
        for f, labels in enumerate(cd.coefficients)
    )


def admissible_arcs(poly: LabeledPolygon) -> list[Arc]:
    """Return the admissible arcs of `poly`, by start vertex then length.

    Full circle arcs are never returned.
    """
    return [arc for arc in poly.all_arcs() if poly.is_admissible(arc)]


def equal_label_arcs(poly: LabeledPolygon) -> list[Arc]:
    """Arcs with equal extreme labels that are not admissible."""
    return [
        arc
        for arc in poly.all_arcs()
        if poly.labels[arc.start] == poly.labels[arc.end]
        and not poly.is_admissible(arc)
    ]


def arc_generator_data(
    es: EuclideanStructure, poly: LabeledPolygon, arc: Arc
) -> tuple[str, DimensionVector, Weight]:
    """Return the name, dimension vector and weight <dim, -> of an arc generator."""
    dimension = poly.arc_dimension(arc)
    return arc.name, dimension, weight_of_left_form(es.quiver, dimension)


def min_level_partition(poly: LabeledPolygon) -> list[Arc] | None:
    """Arcs joining cyclically consecutive zero-labelled vertices.

    They cover every edge exactly once, so their dimensions add up to h. Returns
    `None` when a single vertex carries the label 0.
    """
    zeros = [k for k, label in enumerate(poly.labels) if label == 0]
    if len(zeros) < 2:
        logger.debug(f"Family {poly.family} has a single zero label, no partition")
        return None
    return [poly.arc(a, b) for a, b in zip(zeros, zeros[1:] + zeros[:1], strict=True)]


def arc_hom_nonzero(u: int, x: Arc, y: Arc) -> bool:
    """Whether Hom(E_x, E_y) is nonzero for arc modules of one tube of rank u.

    A nonzero map factors as a quotient of E_x of length l (top e_{s_x}) onto an
    isomorphic submodule of E_y (socle e_{t_y - 1}); this forces
    l = ((t_y - s_x - 1) mod u) + 1, which must not exceed either length.
    """
    if x.family != y.family:
        return False
    length = (y.end - x.start - 1) % u + 1
    return length <= min(x.length, y.length)
