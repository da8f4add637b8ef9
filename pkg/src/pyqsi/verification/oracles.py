"""Randomized exact oracles for the claims of a presentation.

Every oracle evaluates Schofield determinants of seeded integer samples with
exact arithmetic. Ranks of evaluation matrices are certified lower bounds for
the dimension of the spanned function space; they reach it for generic samples.

Functions:
    run_check: Run one check and turn a raised error into a failed result.
    estimate_weight_space_dim: Rank estimate of dim SI(Q, d)_<alpha, ->.
    verify_binomial_law: dim SI(Q, d)_{m defect} = binomial(p + m, m).
    verify_generator_conditions: Hom vanishing and nonvanishing of arc generators.
    verify_relations_span: Products of zero-level arcs against the c^V span.
    check_generic_summands: Pairwise Ext vanishing of the generic summands.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence
    from fractions import Fraction

    from pyqsi.euclidean.structure import EuclideanStructure
    from pyqsi.quiver.vectors import DimensionVector
    from pyqsi.schofield.representation import Representation
    from pyqsi.tubes.decomposition import CanonicalDecomposition
    from pyqsi.tubes.polygons import Arc, LabeledPolygon
    from pyqsi.verification.structs import SamplerConfig

# ✅ Standard library imports
from hashlib import blake2b
from itertools import combinations, permutations
import logging
from math import prod
from time import perf_counter

# ✅ Local imports
from pyqsi.defaults import Defaults
from pyqsi.exceptions.linear_algebra_error import NotOrthogonal
from pyqsi.exceptions.qsi_error import QsiError
from pyqsi.exceptions.regularity_error import DenseOrbitCase
from pyqsi.exceptions.verification_error import SpanMismatch, VerificationError
from pyqsi.presentation.assembly import weight_space_dim_formula
from pyqsi.quiver.forms import apply_weight, euler_form, weight_of_left_form
from pyqsi.schofield.exact_matrix import ExactMatrix
from pyqsi.schofield.semi_invariants import (
    ext_dim,
    hom_dim,
    schofield_vanishes,
    schofield_value,
    schofield_value_mod,
)
from pyqsi.tubes.decomposition import canonical_decomposition, generic_decomposition
from pyqsi.tubes.polygons import (
    admissible_arcs,
    arc_hom_nonzero,
    equal_label_arcs,
    labeled_polygons,
    min_level_partition,
)
from pyqsi.verification.sampling import (
    certified_homogeneous,
    model_arc_module,
    sample_representation,
    simple_regular_models,
)
from pyqsi.verification.structs import CheckResult, RankReport, VerificationReport

logger = logging.getLogger(__name__)


########## Helpers ##########


def run_check(name: str, check: Callable[[], dict[str, Any]]) -> CheckResult:
    """Run `check` and wrap its outcome.

    The callable returns its witnesses when the claim holds and raises otherwise;
    any `QsiError` becomes a failed result carrying the error text.
    """
    start = perf_counter()
    try:
        witnesses = check()
    except QsiError as e:
        logger.error(f"Check {name} failed: {e}")
        return CheckResult(
            name=name,
            passed=False,
            detail=str(e),
            witnesses=getattr(e, "witnesses", {}),
            seconds=perf_counter() - start,
        )
    logger.debug(f"Check {name} passed")
    return CheckResult(
        name=name, passed=True, witnesses=witnesses, seconds=perf_counter() - start
    )


def matrix_digest(m: ExactMatrix) -> str:
    """Short stable hash of a matrix."""
    digest = blake2b(f"{m.rows}x{m.cols}".encode(), digest_size=8)
    for x in m.entries:
        digest.update(f"{x},".encode())
    return digest.hexdigest()


def _tag(v: DimensionVector) -> str:
    return ",".join(str(x) for x in v)


def _values(v: Representation, points: Sequence[Representation]) -> list[Fraction]:
    return [schofield_value(v, w) for w in points]


def _rank(rows: Sequence[Sequence[Fraction]], cfg: SamplerConfig) -> int:
    if not rows:
        return 0
    return ExactMatrix.from_rows(rows).rank(modulus=cfg.modulus)


def _regular_decomposition(
    es: EuclideanStructure, d: DimensionVector
) -> CanonicalDecomposition:
    cd = canonical_decomposition(es, d)
    if cd.p == 0:
        raise DenseOrbitCase(f"{d} has p = 0, there is nothing to verify")
    return cd


########## Weight spaces ##########


def estimate_weight_space_dim(
    es: EuclideanStructure,
    d: DimensionVector,
    alpha: DimensionVector,
    cfg: SamplerConfig,
) -> RankReport:
    """Estimate dim SI(Q, d)_<alpha, -> by the rank of [c^{V_i}(W_j)].

    `cfg.trials` samples V_i of dimension `alpha` (entries bounded by
    `entry_bound`) and W_j of dimension `d` (bounded by `identity_bound`) give the
    full matrix; its leading block with half the samples on each side is the
    doubling control. With a modulus the values and the rank are taken modulo the
    prime, which keeps the rank a lower bound.

    Raises:
        NotOrthogonal: If <alpha, d> != 0.
    """
    q = es.quiver
    pairing = euler_form(q, alpha, d)
    if pairing != 0:
        raise NotOrthogonal(
            f"<{alpha}, {d}> = {pairing}, c^V has no value on Rep(Q, d)"
        )

    n = cfg.trials
    lefts = [
        sample_representation(q, alpha, cfg, f"weight_space/V/{_tag(alpha)}", i)
        for i in range(n)
    ]
    points = [
        sample_representation(
            q, d, cfg, f"weight_space/W/{_tag(d)}", j, bound=cfg.identity_bound
        )
        for j in range(n)
    ]
    if cfg.modulus is None:
        full = ExactMatrix.from_rows([_values(v, points) for v in lefts])
        rank_of = ExactMatrix.rank
    else:
        modulus = cfg.modulus
        full = ExactMatrix.from_rows(
            [[schofield_value_mod(v, w, modulus) for w in points] for v in lefts]
        )

        def rank_of(m: ExactMatrix) -> int:
            return m.rank_mod(modulus)

    half = max(1, n // 2)
    leading = ExactMatrix.from_rows([row[:half] for row in full.to_rows()[:half]])
    report = RankReport(
        estimated_dim=rank_of(full),
        samples_used=n,
        shape=full.shape,
        half_rank=rank_of(leading),
        digest=matrix_digest(full),
    )
    logger.debug(
        f"Weight space <{alpha}, -> on {d}: "
        f"rank {report.half_rank} -> {report.estimated_dim}"
    )
    return report


def verify_binomial_law(
    es: EuclideanStructure, d: DimensionVector, m_max: int, cfg: SamplerConfig
) -> VerificationReport:
    """Compare the rank estimate of SI(Q, d)_{m defect} with binomial(p + m, m).

    m = 0 is the constants and always passes. A weight space passes when the rank
    equals the binomial and the leading half block already reaches it. At most
    2 (binomial + 1) of `cfg.trials` samples are drawn, which still shows a rank
    above the binomial.

    Raises:
        NotRegular: If `d` is not regular.
    """
    cd = canonical_decomposition(es, d)
    report = VerificationReport(seed=cfg.seed)
    report.add(
        CheckResult(
            "binomial_law[m=0]", True, "constants", {"expected": 1, "estimated": 1}
        )
    )

    def check(m: int) -> dict[str, Any]:
        expected = weight_space_dim_formula(cd.p, m)
        alpha = (m * es.h).as_dimension_vector()
        samples = min(cfg.trials, 2 * (expected + 1))
        rank = estimate_weight_space_dim(es, d, alpha, cfg.with_trials(samples))
        witnesses = {"m": m, "p": cd.p, "expected": expected, **rank.to_dict()}
        if rank.estimated_dim != expected or not rank.stable:
            raise SpanMismatch(
                f"dim SI(Q, d)_{m}*defect estimated "
                f"{rank.half_rank} -> {rank.estimated_dim}, "
                f"expected {expected}",
                witnesses,
            )
        return witnesses

    for m in range(1, m_max + 1):
        report.add(run_check(f"binomial_law[m={m}]", lambda m=m: check(m)))
    return report


########## Generators ##########


def verify_generator_conditions(
    es: EuclideanStructure, d: DimensionVector, cfg: SamplerConfig
) -> VerificationReport:
    """Check the defining conditions of every arc generator and of the rejected arcs.

    An admissible arc E must have a weight vanishing on d, no Hom into any generic
    summand or certified homogeneous module, and c^E must not vanish at a general W.
    An arc with equal extreme labels and a smaller interior label must have a Hom
    witness among the generic summands, predicted by the tube combinatorics and
    confirmed numerically. If no interior label is smaller, c^E factors through
    the split at an interior vertex with the same label.

    Raises:
        NotRegular: If `d` is not regular.
        DenseOrbitCase: If p = 0.
        CertificationFailed: If a summand model or a homogeneous sample cannot be
            certified.
    """
    q = es.quiver
    cd = _regular_decomposition(es, d)
    summands = [s.arc for s in generic_decomposition(es, cd).regular_summands()]
    summand_models = {arc: model_arc_module(es, arc, cfg) for arc in summands}
    simples = simple_regular_models(es, cfg)
    homogeneous = [
        certified_homogeneous(es, cfg, "generators/homogeneous", k, simples)
        for k in range(Defaults.HOMOGENEOUS_HOM_SAMPLES)
    ]
    generic = sample_representation(
        q, d, cfg, "generators/generic", bound=cfg.identity_bound
    )

    def admissible(poly: LabeledPolygon, arc: Arc) -> dict[str, Any]:
        model = model_arc_module(es, arc, cfg)
        pairing = apply_weight(weight_of_left_form(q, poly.arc_dimension(arc)), d)
        homs = {
            s.id: hom_dim(model, m, modulus=cfg.modulus)
            for s, m in summand_models.items()
        }
        homogeneous_homs = [hom_dim(model, w, modulus=cfg.modulus) for w in homogeneous]
        witnesses = {
            "weight_on_d": pairing,
            "hom_summands": homs,
            "hom_homogeneous": homogeneous_homs,
        }
        if pairing != 0:
            raise VerificationError(
                f"weight of {arc.id} pairs to {pairing} with d", witnesses
            )
        if any(homs.values()) or any(homogeneous_homs):
            raise VerificationError(
                f"{arc.id} has a nonzero Hom into a summand", witnesses
            )
        if schofield_vanishes(model, generic, modulus=cfg.modulus):
            raise VerificationError(
                f"c^{arc.id} vanishes at a general point", witnesses
            )
        return witnesses

    def obstructed(poly: LabeledPolygon, arc: Arc) -> dict[str, Any]:
        model = model_arc_module(es, arc, cfg)
        predicted = [s for s in summands if arc_hom_nonzero(poly.u, arc, s)]
        confirmed = [
            s.id
            for s in predicted
            if hom_dim(model, summand_models[s], modulus=cfg.modulus) > 0
        ]
        witnesses = {"predicted": [s.id for s in predicted], "confirmed": confirmed}
        if not confirmed:
            raise VerificationError(
                f"no Hom witness for the rejected arc {arc.id}", witnesses
            )
        if not schofield_vanishes(model, generic, modulus=cfg.modulus):
            raise VerificationError(
                f"c^{arc.id} does not vanish despite a Hom witness", witnesses
            )
        return witnesses

    def factorizes(poly: LabeledPolygon, arc: Arc) -> dict[str, Any]:
        level = poly.labels[arc.start]
        split = next(k for k in arc.interior if poly.labels[k] == level)
        first, second = poly.arc(arc.start, split), poly.arc(split, arc.end)
        models = [model_arc_module(es, a, cfg) for a in (arc, first, second)]
        points = [
            sample_representation(
                q, d, cfg, f"factorization/{arc.id}", j, bound=cfg.identity_bound
            )
            for j in range(Defaults.SPAN_POINTS)
        ]
        whole = _values(models[0], points)
        left, right = _values(models[1], points), _values(models[2], points)
        product = [a * b for a, b in zip(left, right, strict=True)]
        rank = _rank([whole, product], cfg)
        witnesses = {"split": [first.id, second.id], "rank": rank}
        if rank != 1 or not any(whole) or not any(product):
            raise VerificationError(
                f"c^{arc.id} is not a multiple of the split product", witnesses
            )
        return witnesses

    report = VerificationReport(seed=cfg.seed)
    for poly in labeled_polygons(es, cd):
        for arc in admissible_arcs(poly):
            name = f"generator[{arc.id}]"
            report.add(run_check(name, lambda p=poly, a=arc: admissible(p, a)))
        for arc in equal_label_arcs(poly):
            level = poly.labels[arc.start]
            if any(poly.labels[k] < level for k in arc.interior):
                name, check = f"hom_witness[{arc.id}]", obstructed
            else:
                name, check = f"factorization[{arc.id}]", factorizes
            report.add(run_check(name, lambda p=poly, a=arc, c=check: c(p, a)))
    return report


def check_generic_summands(
    es: EuclideanStructure, d: DimensionVector, cfg: SamplerConfig
) -> VerificationReport:
    """Check Ext(S_i, S_j) = 0 between distinct regular generic summands.

    Raises:
        NotRegular: If `d` is not regular.
        CertificationFailed: If a summand model cannot be certified.
    """
    cd = canonical_decomposition(es, d)
    summands = [s.arc for s in generic_decomposition(es, cd).regular_summands()]
    models = {arc: model_arc_module(es, arc, cfg) for arc in summands}

    def check() -> dict[str, Any]:
        exts = {
            f"{x.id}|{y.id}": ext_dim(models[x], models[y], modulus=cfg.modulus)
            for x, y in permutations(summands, 2)
        }
        nonzero = {k: v for k, v in exts.items() if v}
        witnesses = {"pairs": len(exts), "nonzero": nonzero}
        if witnesses["nonzero"]:
            raise VerificationError("generic summands have nonzero Ext", witnesses)
        return witnesses

    report = VerificationReport(seed=cfg.seed)
    report.add(run_check("generic_summands", check))
    return report


########## Relations ##########


def verify_relations_span(
    es: EuclideanStructure, d: DimensionVector, cfg: SamplerConfig
) -> VerificationReport:
    """Check the relations through ranks of evaluated semi-invariants.

    The random c^{V_i}, dim V_i = h, span the defect weight space of dimension
    p + 1. Every zero-level product must lie in that span, and the products of up
    to three families must be as independent as the relations allow.

    Raises:
        NotRegular: If `d` is not regular.
        DenseOrbitCase: If p = 0.
        CertificationFailed: If an arc model cannot be certified.
    """
    q = es.quiver
    cd = _regular_decomposition(es, d)
    p = cd.p
    points = [
        sample_representation(q, d, cfg, "span/W", j, bound=cfg.identity_bound)
        for j in range(max(Defaults.SPAN_POINTS, p + 4))
    ]
    randoms = [
        _values(sample_representation(q, es.h, cfg, "span/V", i), points)
        for i in range(max(p + 3, Defaults.SPAN_RANDOM_FUNCTIONS))
    ]
    products: dict[int, list[Fraction]] = {}
    for poly in labeled_polygons(es, cd):
        arcs = min_level_partition(poly)
        if arcs is None:
            continue
        models = [model_arc_module(es, arc, cfg) for arc in arcs]
        products[poly.family] = [
            prod(schofield_value(m, w) for m in models) for w in points
        ]

    report = VerificationReport(seed=cfg.seed)
    random_rank = _rank(randoms, cfg)

    def total_span() -> dict[str, Any]:
        witnesses = {
            "rank": random_rank,
            "expected": p + 1,
            "functions": len(randoms),
            "points": len(points),
            "digest": matrix_digest(ExactMatrix.from_rows(randoms)),
        }
        if random_rank != p + 1:
            raise SpanMismatch(
                f"c^V span has rank {random_rank}, expected {p + 1}", witnesses
            )
        return witnesses

    def in_span(family: int) -> dict[str, Any]:
        row = products[family]
        joined = _rank([*randoms, row], cfg)
        witnesses = {"rank": joined, "span_rank": random_rank}
        if not any(row):
            raise SpanMismatch(
                f"product of family {family} vanishes on every point", witnesses
            )
        if joined != random_rank:
            raise SpanMismatch(
                f"product of family {family} leaves the c^V span", witnesses
            )
        return witnesses

    def products_rank() -> dict[str, Any]:
        rows = list(products.values())
        expected = min(len(rows), p + 1)
        rank = _rank(rows, cfg)
        pairs = {
            f"{f}|{g}": _rank([products[f], products[g]], cfg)
            for f, g in combinations(products, 2)
        }
        together = _rank([*rows, *randoms], cfg)
        witnesses = {
            "rank": rank,
            "expected": expected,
            "pairs": pairs,
            "with_span": together,
        }
        if rank != expected or any(r != 2 for r in pairs.values()) or together != p + 1:
            raise SpanMismatch("zero-level products have the wrong rank", witnesses)
        return witnesses

    report.add(run_check("span[c^V]", total_span))
    for family in products:
        report.add(run_check(f"span[family={family}]", lambda f=family: in_span(f)))
    if products:
        report.add(run_check("span[products]", products_rank))
    return report
