"""Randomized exact verification of presentations.

Classes:
    SamplerConfig: Seed and bounds of the sampler.
    RankReport: Result of a weight space dimension estimate.
    CheckResult: One check.
    VerificationReport: All checks of a run.

Functions:
    sample_representation: Seeded integer representation.
    sample_group_element: Seeded diagonal group element.
    certify_schur: End(V) is one dimensional.
    model_arc_module: Certified model of an arc module.
    certified_homogeneous: Sample of dimension h in a homogeneous tube.
    estimate_weight_space_dim: Rank estimate of a weight space dimension.
    verify_binomial_law: Weight spaces along the defect.
    verify_generator_conditions: Arc generators and rejected arcs.
    verify_relations_span: Relations through span ranks.
    check_generic_summands: Ext vanishing between generic summands.
    verify_presentation: Everything above.
"""

from .harness import verify_presentation
from .oracles import (
    check_generic_summands,
    estimate_weight_space_dim,
    run_check,
    verify_binomial_law,
    verify_generator_conditions,
    verify_relations_span,
)
from .sampling import (
    certified_model,
    certified_homogeneous,
    certify_schur,
    model_arc_module,
    sample_group_element,
    sample_representation,
    simple_regular_models,
)
from .structs import CheckResult, RankReport, SamplerConfig, VerificationReport

__all__ = [
    "CheckResult",
    "RankReport",
    "SamplerConfig",
    "VerificationReport",
    "certified_homogeneous",
    "certified_model",
    "certify_schur",
    "check_generic_summands",
    "estimate_weight_space_dim",
    "model_arc_module",
    "run_check",
    "sample_group_element",
    "sample_representation",
    "simple_regular_models",
    "verify_binomial_law",
    "verify_generator_conditions",
    "verify_presentation",
    "verify_relations_span",
]
