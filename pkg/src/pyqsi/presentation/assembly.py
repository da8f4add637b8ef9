"""Assembly of the presentation of SI(Q, d) for a Euclidean quiver.

For a regular d with p >= 1 the algebra is generated by a basis c_0, ..., c_p of
the defect weight space together with one semi-invariant c^E per admissible arc.
Every family whose zero labels split its polygon contributes one relation
between a homogeneous combination and the product over the zero-level arcs.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Sequence

    from pyqsi.euclidean.structure import EuclideanStructure
    from pyqsi.quiver.vectors import DimensionVector

# ✅ Standard library imports
import logging
from math import comb, prod

# ✅ Third-party imports
import sympy

# ✅ Local imports
from pyqsi.constants import Constants
from pyqsi.exceptions.regularity_error import DenseOrbitCase, NotRegular
from pyqsi.exceptions.structure_error import StructureCheckFailed
from pyqsi.presentation.structs import (
    Classification,
    Generator,
    GeneratorKind,
    Presentation,
    Relation,
)
from pyqsi.quiver.forms import apply_weight
from pyqsi.tubes.decomposition import CanonicalDecomposition, canonical_decomposition
from pyqsi.tubes.polygons import (
    admissible_arcs,
    arc_generator_data,
    labeled_polygons,
    min_level_partition,
)
from pyqsi.defaults import Defaults

logger = logging.getLogger(__name__)


def homogeneous_id(k: int) -> str:
    """Id of the homogeneous generator c_k."""
    return f"{Constants.HOMOGENEOUS_PREFIX}{k}"


def _regular_decomposition(
    es: EuclideanStructure, d: DimensionVector
) -> CanonicalDecomposition:
    cd = canonical_decomposition(es, d)
    if cd.p == 0:
        raise DenseOrbitCase(f"{d} has p = 0; SI(Q, d) is a polynomial ring on its own")
    return cd


def _generators(es: EuclideanStructure, cd: CanonicalDecomposition) -> list[Generator]:
    generators = [
        Generator(
            id=homogeneous_id(k),
            kind=GeneratorKind.HOMOGENEOUS,
            name=f"{Constants.HOMOGENEOUS_PREFIX}_{k}",
            weight=es.defect_weight,
            index=k,
        )
        for k in range(cd.p + 1)
    ]
    for poly in labeled_polygons(es, cd):
        for arc in admissible_arcs(poly):
            name, dimension, weight = arc_generator_data(es, poly, arc)
            generators.append(
                Generator(
                    id=arc.id,
                    kind=GeneratorKind.ARC,
                    name=name,
                    weight=weight,
                    arc=arc,
                    dimension=dimension,
                )
            )
    return generators


def _relations(es: EuclideanStructure, cd: CanonicalDecomposition) -> list[Relation]:
    partitions = [
        (poly.family, arcs)
        for poly in labeled_polygons(es, cd)
        if (arcs := min_level_partition(poly)) is not None
    ]
    every = tuple(homogeneous_id(k) for k in range(cd.p + 1))
    sides = [(homogeneous_id(0),), (homogeneous_id(cd.p),), every]
    return [
        Relation(lhs=lhs, rhs=tuple(arc.id for arc in arcs), family=family)
        for lhs, (family, arcs) in zip(sides, partitions, strict=False)
    ]


def generators(es: EuclideanStructure, d: DimensionVector) -> list[Generator]:
    """Generators of SI(Q, d): c_0, ..., c_p, then one per admissible arc.

    Raises:
        NotRegular: If `d` is not regular.
        DenseOrbitCase: If p = 0.
    """
    return _generators(es, _regular_decomposition(es, d))


def relations(es: EuclideanStructure, d: DimensionVector) -> list[Relation]:
    """Relations of SI(Q, d).

    The first family with a zero-level partition binds c_0, the second binds c_p
    and the third binds c_0 + ... + c_p. Families whose polygon has a single zero
    label contribute nothing.

    Raises:
        NotRegular: If `d` is not regular.
        DenseOrbitCase: If p = 0.
    """
    return _relations(es, _regular_decomposition(es, d))


def eliminate(
    generator_ids: Sequence[str], relation_list: Sequence[Relation]
) -> list[sympy.Expr]:
    """Eliminate homogeneous generators from the relations, Tietze style.

    A relation in which some homogeneous generator occurs linearly with a constant
    coefficient is solved for it; the solution is substituted into the remaining
    relations and relations that become zero are dropped. Arc generators are
    never eliminated.

    Returns:
        The surviving relations as expressions `lhs - rhs`.
    """
    symbols = {i: sympy.Symbol(i) for i in generator_ids}
    homogeneous = [
        symbols[i] for i in generator_ids if i.startswith(Constants.HOMOGENEOUS_PREFIX)
    ]
    remaining = [
        sympy.expand(sum(symbols[i] for i in r.lhs) - prod(symbols[i] for i in r.rhs))
        for r in relation_list
    ]
    eliminated = True
    while eliminated:
        eliminated = False
        for index, expr in enumerate(remaining):
            for x in homogeneous:
                coefficient = expr.coeff(x, 1)
                linear = expr.coeff(x, 2) == 0 and coefficient.is_number
                if not linear or coefficient == 0:
                    continue
                solution = sympy.expand(x - expr / coefficient)
                rest = remaining[:index] + remaining[index + 1 :]
                remaining = [
                    e
                    for e in (sympy.expand(r.subs(x, solution)) for r in rest)
                    if e != 0
                ]
                logger.debug(f"Eliminated {x} = {solution}")
                eliminated = True
                break
            if eliminated:
                break
    return remaining


def classify_algebra(es: EuclideanStructure, d: DimensionVector) -> Classification:
    """Classify SI(Q, d).

    Non-regular d and p = 0 give a polynomial ring with a dense orbit. Otherwise
    the relations are eliminated: none left means a polynomial ring, one left a
    hypersurface, more than one is outside the scope of the elimination.
    """
    try:
        cd = _regular_decomposition(es, d)
    except (NotRegular, DenseOrbitCase) as e:
        logger.debug(f"Dense orbit case: {e}")
        return Classification.DENSE_ORBIT_POLYNOMIAL
    gens = _generators(es, cd)
    return _classify(gens, _relations(es, cd))


def _classify(gens: Sequence[Generator], rels: Sequence[Relation]) -> Classification:
    surviving = eliminate([g.id for g in gens], rels)
    if not surviving:
        return Classification.POLYNOMIAL_RING
    if len(surviving) == 1:
        logger.debug(f"Surviving relation: {surviving[0]} = 0")
        return Classification.HYPERSURFACE
    logger.warning(f"{len(surviving)} relations survive elimination")
    return Classification.OUT_OF_SCOPE


def weight_space_dim_formula(p: int, m: int) -> int:
    """dim SI(Q, d)_{m defect} = binomial(p + m, m).

    Raises:
        ValueError: If `p` or `m` is negative.
    """
    if p < 0 or m < 0:
        raise ValueError(f"p and m must be >= 0, got p={p}, m={m}")
    return comb(p + m, m)


def presentation(
    es: EuclideanStructure,
    d: DimensionVector,
    weight_space_bound: int = Defaults.WEIGHT_SPACE_BOUND,
) -> Presentation:
    """Assemble the presentation of SI(Q, d).

    Args:
        es: Euclidean structure of the quiver.
        d: Dimension vector.
        weight_space_bound: Largest m listed in `weight_space_dims`.

    Raises:
        StructureCheckFailed: If a generator weight does not vanish on d.
    """
    try:
        cd = canonical_decomposition(es, d)
    except NotRegular as e:
        logger.info(f"{d} is not regular, SI(Q, d) is a polynomial ring")
        return Presentation(
            d=d,
            p=None,
            generators=(),
            relations=(),
            classification=Classification.DENSE_ORBIT_POLYNOMIAL,
            warnings=(f"not regular: {e.message}",),
        )
    dims = {m: weight_space_dim_formula(cd.p, m) for m in range(weight_space_bound + 1)}
    if cd.p == 0:
        logger.info(f"{d} has p = 0, SI(Q, d) is a polynomial ring")
        return Presentation(
            d=d,
            p=0,
            generators=(),
            relations=(),
            classification=Classification.DENSE_ORBIT_POLYNOMIAL,
            weight_space_dims=dims,
            warnings=("p = 0: generators of the dense orbit case are not computed",),
        )

    gens = _generators(es, cd)
    for g in gens:
        if apply_weight(g.weight, d) != 0:
            raise StructureCheckFailed(
                f"generator {g.id} has weight {g.weight} not vanishing on {d}"
            )
    rels = _relations(es, cd)
    warnings = tuple(
        f"family {poly.family} has a single zero label; its relation is not emitted"
        for poly in labeled_polygons(es, cd)
        if min_level_partition(poly) is None
    )
    for w in warnings:
        logger.warning(w)

    result = Presentation(
        d=d,
        p=cd.p,
        generators=tuple(gens),
        relations=tuple(rels),
        classification=_classify(gens, rels),
        weight_space_dims=dims,
        warnings=warnings,
    )
    logger.info(
        f"Presentation of SI(Q, {d}): {len(gens)} generators, {len(rels)} relations, "
        f"{result.classification.value}"
    )
    return result
