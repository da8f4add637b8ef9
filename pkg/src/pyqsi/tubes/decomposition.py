"""Canonical and generic decompositions of regular dimension vectors.

A regular dimension vector d is written uniquely as d = p h + sum_f sum_i p^f_i e^f_i
with nonnegative coefficients and a zero coefficient in every family. Within a
family the Euler values fix consecutive differences, <e_k, d> = p_k - p_{k+1}, so the
labels are found by a walk around the polygon and the rest must be a multiple of h.

Classes:
    CanonicalDecomposition: p and the per-family labels.
    Summand: One summand of the generic decomposition.
    GenericDecomposition: The summands of a general representation.

Functions:
    canonical_decomposition: Compute the canonical decomposition.
    is_regular: Whether a canonical decomposition exists.
    generic_decomposition: Peel the labels into generic summands.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from pyqsi.euclidean.structure import EuclideanStructure
    from pyqsi.quiver.vectors import IntVector

# ✅ Standard library imports
from collections import Counter
from dataclasses import dataclass
import logging

# ✅ Local imports
from pyqsi.exceptions.regularity_error import NotRegular
from pyqsi.quiver.forms import euler_form
from pyqsi.quiver.vectors import DimensionVector, vector_sum
from pyqsi.tubes.polygons import Arc, labeled_polygons

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CanonicalDecomposition:
    """The decomposition d = p h + sum_f sum_i p^f_i e^f_i.

    Attributes:
        d: The decomposed dimension vector.
        p: Multiplicity of h.
        coefficients: Per family, the labels p^f_i in polygon order.
    """

    d: DimensionVector
    p: int
    coefficients: tuple[tuple[int, ...], ...]

    def reconstruct(self, es: EuclideanStructure) -> DimensionVector:
        """Rebuild p h + sum of the labelled family vectors."""
        n = es.quiver.n
        total = self.p * es.h
        for f, labels in enumerate(self.coefficients):
            total = total + vector_sum(
                (c * e for c, e in zip(labels, es.oriented(f), strict=True)), n
            )
        return total.as_dimension_vector()

    def to_dict(self, es: EuclideanStructure) -> dict[str, Any]:  # noqa: D102
        return {
            "d": es.quiver.vector_to_mapping(self.d),
            "p": self.p,
            "coefficients": [list(labels) for labels in self.coefficients],
        }


@dataclass(frozen=True)
class Summand:
    """One summand of a generic decomposition.

    Attributes:
        dimension: Its dimension vector.
        arc: The arc of the regular module, `None` for a copy of h.
    """

    dimension: DimensionVector
    arc: Arc | None = None

    @property
    def is_homogeneous(self) -> bool:
        """True for a copy of h."""
        return self.arc is None


@dataclass(frozen=True)
class GenericDecomposition:
    """Dimension vectors of the indecomposable summands of a general representation.

    Attributes:
        summands: All summands with repetition; the p copies of h come first.
    """

    summands: tuple[Summand, ...]

    def multiplicities(self) -> list[tuple[DimensionVector, int]]:
        """Distinct summand dimensions with multiplicities, in first-seen order."""
        return list(Counter(s.dimension for s in self.summands).items())

    def regular_summands(self) -> list[Summand]:
        """The distinct summands that are not copies of h."""
        return list(dict.fromkeys(s for s in self.summands if not s.is_homogeneous))

    def total(self, n: int) -> IntVector:
        """Sum of all summands."""
        return vector_sum((s.dimension for s in self.summands), n)

    def to_dict(self, es: EuclideanStructure) -> list[dict[str, Any]]:  # noqa: D102
        q = es.quiver
        return [
            {
                "dim": q.vector_to_mapping(summand.dimension),
                "multiplicity": count,
                "arc": None if summand.arc is None else summand.arc.id,
            }
            for summand, count in Counter(self.summands).items()
        ]


def _family_labels(es: EuclideanStructure, f: int, d: IntVector) -> tuple[int, ...]:
    vectors = es.oriented(f)
    labels = [0]
    for e in vectors[:-1]:
        labels.append(labels[-1] - euler_form(es.quiver, e, d))
    low = min(labels)
    return tuple(label - low for label in labels)


def canonical_decomposition(
    es: EuclideanStructure, d: DimensionVector
) -> CanonicalDecomposition:
    """Compute the canonical decomposition of `d`.

    Args:
        es: Euclidean structure of the quiver.
        d: A dimension vector of the quiver.

    Returns:
        The unique decomposition with a zero label in every family.

    Raises:
        NotRegular: If `d` has nonzero defect or no nonnegative decomposition.
        IndexMismatch: If `d` is not indexed by the vertices of the quiver.
    """
    q = es.quiver
    q.check(d)
    if es.defect(d) != 0:
        raise NotRegular(f"{d} has defect {es.defect(d)}")

    coefficients = tuple(_family_labels(es, f, d) for f in range(len(es.families)))
    residue = d - vector_sum(
        (
            c * e
            for f, labels in enumerate(coefficients)
            for c, e in zip(labels, es.oriented(f), strict=True)
        ),
        q.n,
    )
    p = residue[0] // es.h[0]
    if p < 0 or residue != p * es.h:
        raise NotRegular(
            f"{d} is not p h plus nonnegative family sums (residue {residue})"
        )

    cd = CanonicalDecomposition(d=d, p=p, coefficients=coefficients)
    logger.debug(f"Canonical decomposition of {d}: p={p}, labels {coefficients}")
    return cd


def is_regular(es: EuclideanStructure, d: DimensionVector) -> bool:
    """True iff `d` has a canonical decomposition."""
    try:
        canonical_decomposition(es, d)
    except NotRegular:
        return False
    return True


def generic_decomposition(
    es: EuclideanStructure, cd: CanonicalDecomposition
) -> GenericDecomposition:
    """Peel the labels of every polygon into generic summands.

    For the top level s of a polygon the vertices labelled s split into maximal
    cyclic runs; a run over the vertices i, ..., j gives the summand
    e_i + ... + e_j (the arc [i, j + 1]). The run labels drop by one and the
    procedure repeats until every label is 0. The p copies of h come first.
    """
    summands = [Summand(es.h) for _ in range(cd.p)]
    for poly in labeled_polygons(es, cd):
        labels = list(poly.labels)
        u = poly.u
        while (level := max(labels)) > 0:
            top = [k for k in range(u) if labels[k] == level]
            starts = [k for k in top if labels[(k - 1) % u] != level]
            for start in starts:
                length = 1
                while labels[(start + length) % u] == level:
                    length += 1
                arc = poly.arc(start, (start + length) % u)
                summands.append(Summand(poly.arc_dimension(arc), arc))
            for k in top:
                labels[k] -= 1
    decomposition = GenericDecomposition(tuple(summands))
    logger.debug(f"Generic decomposition of {cd.d}: {decomposition.multiplicities()}")
    return decomposition
