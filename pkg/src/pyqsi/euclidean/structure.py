"""Root data of a Euclidean quiver.

For a Euclidean quiver this module computes the radical generator h, the defect
weight, the Coxeter transformation and the Coxeter orbits of the non-homogeneous
simple regular dimension vectors. Every orbit family is validated before it is
handed out; a violated invariant raises
[StructureCheckFailed][pyqsi.exceptions.StructureCheckFailed].

Classes:
    CoxeterOrder: Order in which the vertex reflections are composed.
    OrbitFamily: One Coxeter orbit [e_0, ..., e_{u-1}].
    EuclideanStructure: h, the defect weight and the orbit families of a quiver.

Functions:
    radical_generator: Primitive positive generator of the radical of q.
    defect: The defect <h, d>.
    coxeter_transform: Apply the Coxeter transformation.
    coxeter_inverse: Apply its inverse.
    defect_zero_roots_below_h: Real roots 0 < b < h of defect zero.
    simple_regular_orbits: Build the EuclideanStructure of a quiver.
    check_structure: Re-validate a EuclideanStructure.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    from pyqsi.quiver.quiver import Quiver

# ✅ Standard library imports
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
import logging
from math import gcd

# ✅ Third-party imports
import sympy

# ✅ Local imports
from pyqsi.euclidean.classification import GraphClass, classify_graph, tits_gram_matrix
from pyqsi.exceptions.structure_error import NotEuclidean, StructureCheckFailed
from pyqsi.quiver.forms import euler_form, quadratic_form, weight_of_left_form
from pyqsi.quiver.vectors import DimensionVector, IntVector, Weight, vector_sum

logger = logging.getLogger(__name__)


class CoxeterOrder(Enum):
    """Composition order of the reflections in C = s_1 s_2 ... s_n.

    `SINK_FIRST` applies s_n (a sink in topological order) first.
    """

    SINK_FIRST = "sink_first"
    SOURCE_FIRST = "source_first"


@dataclass(frozen=True)
class OrbitFamily:
    """A Coxeter orbit of non-homogeneous simple regular dimension vectors.

    Attributes:
        vectors: The cyclically ordered orbit, C(e_i) = e_{i+1 mod u}.
    """

    vectors: tuple[DimensionVector, ...]

    @property
    def u(self) -> int:
        """Size of the orbit (the rank of the tube)."""
        return len(self.vectors)

    def __getitem__(self, i: int) -> DimensionVector:  # noqa: D105
        return self.vectors[i % self.u]

    def __iter__(self) -> Iterator[DimensionVector]:  # noqa: D105
        return iter(self.vectors)

    def arc_sum(self, start: int, length: int) -> IntVector:
        """Return e_start + e_{start+1} + ... over `length` consecutive edges."""
        n = len(self.vectors[0])
        return vector_sum((self[start + k] for k in range(length)), n)


@dataclass(frozen=True)
class EuclideanStructure:
    """Radical, defect and simple regular orbit families of a Euclidean quiver.

    Attributes:
        quiver: The quiver.
        graph_class: Its classification (always Euclidean).
        h: Primitive positive radical generator.
        defect_weight: Coordinates of the defect <h, ->.
        families: The non-homogeneous orbit families, in deterministic order.
        coxeter_order: Reflection order used for the Coxeter transformation.
    """

    quiver: Quiver
    graph_class: GraphClass
    h: DimensionVector
    defect_weight: Weight
    families: tuple[OrbitFamily, ...]
    coxeter_order: CoxeterOrder = CoxeterOrder.SINK_FIRST

    @property
    def tube_ranks(self) -> tuple[int, ...]:
        """Ranks of the non-homogeneous tubes, one per family."""
        return tuple(f.u for f in self.families)

    def defect(self, d: IntVector) -> int:
        """The defect <h, d>."""
        return euler_form(self.quiver, self.h, d)

    def coxeter(self, a: IntVector) -> IntVector:
        """The Coxeter transformation in this structure's order."""
        return coxeter_transform(self.quiver, a, self.coxeter_order)

    def oriented(self, f: int) -> tuple[DimensionVector, ...]:
        """Vectors of family `f` ordered so that <e_i, e_{i+1}> = -1.

        This is the orbit order itself for `SINK_FIRST`; `SOURCE_FIRST` composes
        the inverse transformation, so its orbit is read backwards.
        """
        vectors = self.families[f].vectors
        if self.coxeter_order is CoxeterOrder.SINK_FIRST:
            return vectors
        return (vectors[0], *reversed(vectors[1:]))

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready form with h, the defect and the orbit families."""
        q = self.quiver
        return {
            "type": self.graph_class.type,
            "h": q.vector_to_mapping(self.h),
            "defect_weight": q.vector_to_mapping(self.defect_weight),
            "coxeter_order": self.coxeter_order.value,
            "families": [
                {"size": f.u, "vectors": [q.vector_to_mapping(e) for e in f]}
                for f in self.families
            ],
        }


########## Radical and defect ##########


@lru_cache(maxsize=32)
def _radical(q: Quiver) -> tuple[GraphClass, DimensionVector]:
    graph_class = classify_graph(q)
    if not graph_class.is_euclidean:
        raise NotEuclidean(f"quiver {list(q.vertices)} is {graph_class}")
    (kernel,) = tits_gram_matrix(q).nullspace()
    scale = sympy.lcm([x.q for x in kernel])
    entries = [int(x * scale) for x in kernel]
    common = gcd(*entries)
    if entries[0] < 0:
        common = -common
    h = DimensionVector(tuple(x // common for x in entries))
    logger.debug(f"Radical generator of {list(q.vertices)}: {h}")
    return graph_class, h


def radical_generator(q: Quiver) -> DimensionVector:
    """Return the primitive positive integer vector spanning the radical of q.

    Raises:
        NotEuclidean: If the quiver is not Euclidean.
    """
    return _radical(q)[1]


def defect(q: Quiver, d: IntVector) -> int:
    """Return the defect <h, d> of `d`.

    Raises:
        NotEuclidean: If the quiver is not Euclidean.
        IndexMismatch: If `d` is not indexed by the vertices of `q`.
    """
    return euler_form(q, radical_generator(q), d)


########## Coxeter transformation ##########


def _reflect(q: Quiver, a: list[int], x: int) -> None:
    a[x] = (
        sum(a[arrow.head] for arrow in q.arrows_out_of(x))
        + sum(a[arrow.tail] for arrow in q.arrows_into(x))
        - a[x]
    )


def _reflection_order(q: Quiver, order: CoxeterOrder) -> range:
    if order is CoxeterOrder.SINK_FIRST:
        return range(q.n - 1, -1, -1)
    return range(q.n)


def coxeter_transform(
    q: Quiver, a: IntVector, order: CoxeterOrder = CoxeterOrder.SINK_FIRST
) -> IntVector:
    """Apply C = s_1 s_2 ... s_n to an integer vector.

    The reflection at vertex x replaces a(x) by the sum of a over all neighbours
    of x (with multiplicity) minus a(x). With `SINK_FIRST` the reflection at the
    last vertex in topological order is applied first.

    Raises:
        IndexMismatch: If `a` is not indexed by the vertices of `q`.
    """
    q.check(a)
    entries = list(a)
    for x in _reflection_order(q, order):
        _reflect(q, entries, x)
    return IntVector(tuple(entries))


def coxeter_inverse(
    q: Quiver, a: IntVector, order: CoxeterOrder = CoxeterOrder.SINK_FIRST
) -> IntVector:
    """Apply the inverse of `coxeter_transform` (reflections in reverse order)."""
    q.check(a)
    entries = list(a)
    for x in reversed(_reflection_order(q, order)):
        _reflect(q, entries, x)
    return IntVector(tuple(entries))


########## Roots and orbits ##########


def defect_zero_roots_below_h(q: Quiver) -> frozenset[DimensionVector]:
    """Return every b with 0 < b < h, q(b) = 1 and defect zero.

    The box [0, h] is scanned exhaustively; h is small for every Euclidean type.

    Raises:
        NotEuclidean: If the quiver is not Euclidean.
    """
    h = radical_generator(q)
    weight = weight_of_left_form(q, h).entries
    arrows = [(a.tail, a.head) for a in q.arrows]
    roots = set()
    for entries in product(*(range(x + 1) for x in h)):
        if sum(w * b for w, b in zip(weight, entries, strict=True)) != 0:
            continue
        square = sum(b * b for b in entries) - sum(
            entries[t] * entries[s] for t, s in arrows
        )
        if square == 1 and entries != h.entries:
            roots.add(DimensionVector(entries))
    logger.debug(f"Found {len(roots)} defect zero roots below h={h}")
    return frozenset(roots)


def _minimal_roots(roots: frozenset[DimensionVector]) -> list[DimensionVector]:
    """Roots that are not the sum of two roots of the same set, sorted."""
    keys = {r.entries for r in roots}
    minimal = []
    for r in roots:
        if not any(
            tuple(a - b for a, b in zip(r, s, strict=True)) in keys
            for s in roots
            if s != r
        ):
            minimal.append(r)
    return sorted(minimal)


def simple_regular_orbits(
    q: Quiver, order: CoxeterOrder = CoxeterOrder.SINK_FIRST
) -> EuclideanStructure:
    """Compute the EuclideanStructure of `q`.

    The families are the Coxeter orbits of the minimal defect zero roots below h.
    Families are sorted by their smallest vector and each cycle starts there.

    Args:
        q: A Euclidean quiver.
        order: Composition order of the Coxeter transformation.

    Raises:
        NotEuclidean: If the quiver is not Euclidean.
        StructureCheckFailed: If an orbit leaves the set of simple regulars or any
            family invariant fails.
    """
    graph_class, h = _radical(q)
    roots = defect_zero_roots_below_h(q)
    minimal = _minimal_roots(roots)
    remaining = set(minimal)

    families = []
    for start in minimal:
        if start not in remaining:
            continue
        orbit = [start]
        current = coxeter_transform(q, start, order)
        while current != start:
            if current not in remaining or len(orbit) > len(minimal):
                raise StructureCheckFailed(
                    f"Coxeter orbit of {start} leaves the simple regular roots "
                    f"at {current}"
                )
            orbit.append(current.as_dimension_vector())
            current = coxeter_transform(q, current, order)
        remaining.difference_update(orbit)
        if len(orbit) == 1:
            logger.warning(f"Discarding Coxeter fixed root {start}")
            continue
        families.append(OrbitFamily(tuple(orbit)))
        logger.debug(f"Orbit family of size {len(orbit)}: {orbit}")

    structure = EuclideanStructure(
        quiver=q,
        graph_class=graph_class,
        h=h,
        defect_weight=weight_of_left_form(q, h),
        families=tuple(families),
        coxeter_order=order,
    )
    check_structure(structure, roots)
    logger.info(f"{graph_class.type}: h={h}, tube ranks {structure.tube_ranks}")
    return structure


def _consecutive_sums(family: OrbitFamily) -> Iterable[IntVector]:
    for start in range(family.u):
        for length in range(1, family.u):
            yield family.arc_sum(start, length)


def check_structure(
    es: EuclideanStructure, roots: frozenset[DimensionVector] | None = None
) -> None:
    """Validate every invariant of a EuclideanStructure.

    Checks h (radical, positive, primitive, Coxeter fixed), each family (orbit
    closure, sum h, defect zero, Euler table 1 / -1 / 0 along the cycle), zero Euler
    values across families, the rank count sum(u - 1) = n - 2, and that every defect
    zero root below h is a consecutive cyclic sum in exactly one family.

    Args:
        es: The structure to check.
        roots: Precomputed `defect_zero_roots_below_h`, recomputed when omitted.

    Raises:
        StructureCheckFailed: On the first violated invariant.
    """
    q, h = es.quiver, es.h
    step = 1 if es.coxeter_order is CoxeterOrder.SINK_FIRST else -1

    def fail(message: str) -> None:
        logger.error(f"Structure check failed: {message}")
        raise StructureCheckFailed(message)

    if quadratic_form(q, h) != 0 or min(h) < 1 or gcd(*h) != 1:
        fail(f"{h} is not a primitive positive radical vector")
    if es.coxeter(h) != h:
        fail(f"h={h} is not fixed by the Coxeter transformation")
    if es.defect_weight != weight_of_left_form(q, h):
        fail("defect weight does not match <h, ->")

    for f, family in enumerate(es.families):
        if family.u < 2:
            fail(f"family {f} has size {family.u}")
        if vector_sum(family, q.n) != h:
            fail(f"family {f} does not sum to h")
        for i, e in enumerate(family):
            if es.coxeter(e) != family[i + 1]:
                fail(f"C(e_{i}) != e_{i + 1} in family {f}")
            if es.defect(e) != 0 or quadratic_form(q, e) != 1:
                fail(f"e_{i}={e} of family {f} is not a defect zero real root")
            for j in range(family.u):
                expected = 1 if i == j else (-1 if j == (i + step) % family.u else 0)
                if euler_form(q, e, family[j]) != expected:
                    fail(f"<e_{i}, e_{j}> != {expected} in family {f}")
        for g in range(f + 1, len(es.families)):
            for e, other in product(family, es.families[g]):
                if euler_form(q, e, other) != 0 or euler_form(q, other, e) != 0:
                    fail(f"families {f} and {g} are not Euler orthogonal")

    if sum(f.u - 1 for f in es.families) != q.n - 2:
        fail(f"tube ranks {es.tube_ranks} do not add up for {q.n} vertices")

    roots = defect_zero_roots_below_h(q) if roots is None else roots
    counts = Counter(s for family in es.families for s in _consecutive_sums(family))
    for s, count in counts.items():
        if s not in roots:
            fail(f"consecutive sum {s} is not a defect zero root below h")
        if count > 1:
            fail(f"consecutive sum {s} occurs {count} times")
    if len(counts) != len(roots):
        fail(f"{len(roots) - len(counts)} roots are not consecutive sums in any family")
