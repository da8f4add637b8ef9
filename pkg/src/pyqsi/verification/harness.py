"""End to end verification of the presentation of SI(Q, d).

The harness runs the structural round trips first, then the oracle stages.
Stages are independent and seeded by tag, so they may run on a thread pool
without changing the report.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from collections.abc import Callable

    from pyqsi.euclidean.structure import EuclideanStructure
    from pyqsi.quiver.vectors import DimensionVector
    from pyqsi.tubes.decomposition import CanonicalDecomposition

# ✅ Standard library imports
from concurrent.futures import ThreadPoolExecutor
import logging

# ✅ Local imports
from pyqsi.defaults import Defaults
from pyqsi.euclidean.structure import check_structure, defect_zero_roots_below_h
from pyqsi.exceptions.qsi_error import QsiError
from pyqsi.exceptions.regularity_error import NotRegular
from pyqsi.exceptions.verification_error import VerificationError
from pyqsi.presentation.assembly import presentation, weight_space_dim_formula
from pyqsi.quiver.vectors import vector_sum
from pyqsi.tubes.decomposition import canonical_decomposition, generic_decomposition
from pyqsi.verification.oracles import (
    check_generic_summands,
    run_check,
    verify_binomial_law,
    verify_generator_conditions,
    verify_relations_span,
)
from pyqsi.verification.structs import CheckResult, SamplerConfig, VerificationReport

logger = logging.getLogger(__name__)


########## Round trips ##########


def _structure(es: EuclideanStructure) -> dict[str, Any]:
    check_structure(es)
    return {"type": es.graph_class.type, "tube_ranks": list(es.tube_ranks)}


def _canonical(es: EuclideanStructure, cd: CanonicalDecomposition) -> dict[str, Any]:
    rebuilt = cd.reconstruct(es)
    witnesses = {"p": cd.p, "coefficients": [list(c) for c in cd.coefficients]}
    if rebuilt != cd.d:
        raise VerificationError(
            f"canonical decomposition rebuilds {rebuilt}", witnesses
        )
    if any(min(labels) != 0 for labels in cd.coefficients):
        raise VerificationError("a family has no zero label", witnesses)
    return witnesses


def _generic(es: EuclideanStructure, cd: CanonicalDecomposition) -> dict[str, Any]:
    gd = generic_decomposition(es, cd)
    roots = defect_zero_roots_below_h(es.quiver)
    total = gd.total(es.quiver.n)
    witnesses = {"summands": len(gd.summands), "distinct": len(gd.multiplicities())}
    if total != cd.d:
        raise VerificationError(f"generic summands add up to {total}", witnesses)
    strays = [s.arc.id for s in gd.regular_summands() if s.dimension not in roots]
    if strays:
        raise VerificationError(
            f"summands {strays} are not simple regular roots", witnesses
        )
    return witnesses


def _presentation(es: EuclideanStructure, cd: CanonicalDecomposition) -> dict[str, Any]:
    result = presentation(es, cd.d)
    n = es.quiver.n
    for relation in result.relations:
        total = vector_sum((result.generator(i).dimension for i in relation.rhs), n)
        if total != es.h:
            raise VerificationError(
                f"zero-level arcs of family {relation.family} add up to {total}, not h"
            )
    for m, k in result.weight_space_dims.items():
        if k != weight_space_dim_formula(cd.p, m):
            raise VerificationError(f"weight space dimension {k} listed for m = {m}")
    return {
        "generators": len(result.generators),
        "relations": len(result.relations),
        "classification": result.classification.value,
    }


########## Main Methods ##########


def _stage(
    name: str, stage: Callable[[], VerificationReport], seed: int
) -> VerificationReport:
    try:
        return stage()
    except QsiError as e:
        logger.error(f"Stage {name} failed: {e}")
        report = VerificationReport(seed=seed)
        report.add(CheckResult(name, False, str(e), getattr(e, "witnesses", {})))
        return report


def verify_presentation(
    es: EuclideanStructure,
    d: DimensionVector,
    cfg: SamplerConfig | None = None,
    m_max: int = Defaults.M_MAX,
) -> VerificationReport:
    """Verify every checkable claim of the presentation of SI(Q, d).

    Runs the structure check, the decomposition round trips, the generator
    conditions, the generic summand compatibility, the binomial law for
    m <= `m_max` and the relation span checks. A non-regular d or p = 0 is the
    dense orbit case and only gets the structural checks.

    Failures never raise; they are failed checks of the report.

    Args:
        es: Euclidean structure of the quiver.
        d: Dimension vector.
        cfg: Sampler configuration, default values when omitted.
        m_max: Largest multiple of the defect checked against the binomial law.

    Returns:
        The report, deterministic for a fixed configuration.
    """
    cfg = cfg or SamplerConfig()
    report = VerificationReport(seed=cfg.seed)
    report.add(run_check("structure", lambda: _structure(es)))

    try:
        cd = canonical_decomposition(es, d)
    except NotRegular as e:
        report.add(CheckResult("regularity", True, f"dense orbit case: {e.message}"))
        return report
    except QsiError as e:
        report.add(CheckResult("regularity", False, str(e)))
        return report
    report.add(run_check("canonical_round_trip", lambda: _canonical(es, cd)))
    report.add(run_check("generic_round_trip", lambda: _generic(es, cd)))
    if cd.p == 0:
        report.add(CheckResult("regularity", True, "dense orbit case: p = 0"))
        return report
    report.add(run_check("presentation", lambda: _presentation(es, cd)))

    stages: list[tuple[str, Callable[[], VerificationReport]]] = [
        ("generator_conditions", lambda: verify_generator_conditions(es, d, cfg)),
        ("generic_summands", lambda: check_generic_summands(es, d, cfg)),
        ("binomial_law", lambda: verify_binomial_law(es, d, m_max, cfg)),
        ("relations_span", lambda: verify_relations_span(es, d, cfg)),
    ]
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(lambda s: _stage(s[0], s[1], cfg.seed), stages))
    else:
        results = [_stage(name, stage, cfg.seed) for name, stage in stages]
    for result in results:
        report.extend(result)

    verdict = "passed" if report.passed else f"failed ({len(report.failed())} checks)"
    logger.info(f"Verification of {d} with seed {cfg.seed} {verdict}")
    return report
