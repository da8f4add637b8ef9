"""Seeded sampling of representations and certified arc module models.

Every random draw is made from its own stream, seeded by the root seed, a
string tag and an index, so results do not depend on evaluation order and
samples with a common tag form prefix-consistent sequences.

Functions:
    stream: numpy Generator for (seed, tag, index).
    sample_representation: Random integer representation.
    sample_group_element: Random diagonal element of GL(d).
    certify_schur: End(V) is one dimensional.
    certified_model: Schur sample of a dimension vector.
    model_arc_module: Certified model of the module of an arc.
    simple_regular_models: Certified simple regular modules of the exceptional tubes.
    certified_homogeneous: Sample of dimension h in a homogeneous tube.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pyqsi.euclidean.structure import EuclideanStructure
    from pyqsi.quiver.quiver import Quiver
    from pyqsi.quiver.vectors import DimensionVector
    from pyqsi.tubes.polygons import Arc
    from pyqsi.verification.structs import SamplerConfig

# ✅ Standard library imports
from hashlib import blake2b
import logging

# ✅ Third-party imports
import numpy as np

# ✅ Local imports
from pyqsi.exceptions.verification_error import CertificationFailed
from pyqsi.quiver.vectors import vector_sum
from pyqsi.schofield.exact_matrix import ExactMatrix
from pyqsi.schofield.representation import GroupElement, Representation
from pyqsi.schofield.semi_invariants import hom_dim

logger = logging.getLogger(__name__)


def tag_key(tag: str) -> int:
    """64-bit integer key of a stream tag."""
    return int.from_bytes(blake2b(tag.encode(), digest_size=8).digest(), "big")


def stream(seed: int, tag: str, index: int = 0) -> np.random.Generator:
    """Independent random stream for (seed, tag, index)."""
    return np.random.default_rng(np.random.SeedSequence([seed, tag_key(tag), index]))


def _matrix(rng: np.random.Generator, rows: int, cols: int, bound: int) -> ExactMatrix:
    values = rng.integers(-bound, bound, size=rows * cols, endpoint=True)
    return ExactMatrix(rows, cols, tuple(int(v) for v in values))


def sample_representation(
    q: Quiver,
    dim: DimensionVector,
    cfg: SamplerConfig,
    stream_tag: str,
    index: int = 0,
    bound: int | None = None,
) -> Representation:
    """Representation with uniform integer entries in [-bound, bound].

    Args:
        q: The quiver.
        dim: Dimension vector.
        cfg: Sampler configuration; `entry_bound` is the default bound.
        stream_tag: Tag of the random stream.
        index: Index within the stream.
        bound: Entry bound overriding `cfg.entry_bound`.
    """
    rng = stream(cfg.seed, stream_tag, index)
    bound = cfg.entry_bound if bound is None else bound
    return Representation(
        q, dim, tuple(_matrix(rng, dim[a.head], dim[a.tail], bound) for a in q.arrows)
    )


def sample_group_element(
    q: Quiver, dim: DimensionVector, cfg: SamplerConfig, stream_tag: str, index: int = 0
) -> GroupElement:
    """Diagonal element of GL(dim) with nonzero entries of size at most entry_bound."""
    rng = stream(cfg.seed, stream_tag, index)
    blocks = []
    for k in dim:
        magnitudes = rng.integers(1, cfg.entry_bound, size=k, endpoint=True)
        signs = rng.choice([-1, 1], size=k)
        entries = (int(m) * int(s) for m, s in zip(magnitudes, signs, strict=True))
        blocks.append(ExactMatrix.diagonal(entries))
    return GroupElement(q, dim, tuple(blocks))


def certify_schur(v: Representation, modulus: int | None = None) -> bool:
    """True iff End(V) is one dimensional."""
    return hom_dim(v, v, modulus=modulus) == 1


def certified_model(
    q: Quiver, dim: DimensionVector, cfg: SamplerConfig, stream_tag: str
) -> Representation:
    """Sample representations of `dim` until one is Schur.

    Raises:
        CertificationFailed: If `cfg.retry_limit` samples are all decomposable.
    """
    for attempt in range(cfg.retry_limit):
        candidate = sample_representation(q, dim, cfg, stream_tag, attempt)
        if certify_schur(candidate, modulus=cfg.modulus):
            return candidate
        logger.debug(f"Sample {attempt} of {stream_tag} is not Schur, retrying")
    raise CertificationFailed(
        f"no Schur representation of dimension {dim} in {cfg.retry_limit} samples "
        f"(tag {stream_tag!r}, seed {cfg.seed})"
    )


def model_arc_module(
    es: EuclideanStructure, arc: Arc, cfg: SamplerConfig
) -> Representation:
    """Certified model of the uniserial module E of an arc.

    The dimension vector of an arc is a real Schur root, so any Schur
    representation of that dimension is isomorphic to E.

    Raises:
        CertificationFailed: If no Schur sample is found within the retry limit.
    """
    vectors = es.oriented(arc.family)
    dimension = vector_sum((vectors[k] for k in arc.edges), es.quiver.n)
    return certified_model(
        es.quiver, dimension.as_dimension_vector(), cfg, f"arc/{arc.id}"
    )


def simple_regular_models(
    es: EuclideanStructure, cfg: SamplerConfig
) -> list[Representation]:
    """Certified models of the simple regular modules of every non-homogeneous tube.

    Raises:
        CertificationFailed: If no Schur sample is found within the retry limit.
    """
    return [
        certified_model(es.quiver, e, cfg, f"quasi_simple/{f}:{k}")
        for f in range(len(es.families))
        for k, e in enumerate(es.oriented(f))
    ]


def certified_homogeneous(
    es: EuclideanStructure,
    cfg: SamplerConfig,
    stream_tag: str,
    index: int = 0,
    simples: list[Representation] | None = None,
) -> Representation:
    """Sample of dimension h lying in a homogeneous tube.

    A Schur representation of dimension h is regular and indecomposable. It lies
    in a homogeneous tube iff no simple regular module of a non-homogeneous tube
    maps to it. Entries are drawn up to `cfg.identity_bound`.

    Args:
        es: Euclidean structure of the quiver.
        cfg: Sampler configuration.
        stream_tag: Tag of the random stream.
        index: Which homogeneous sample of the stream to draw.
        simples: Models from `simple_regular_models`, computed when omitted.

    Raises:
        CertificationFailed: If `cfg.retry_limit` samples all fail the check.
    """
    simples = simple_regular_models(es, cfg) if simples is None else simples
    tag = f"{stream_tag}/{index}"
    for attempt in range(cfg.retry_limit):
        candidate = sample_representation(
            es.quiver, es.h, cfg, tag, attempt, bound=cfg.identity_bound
        )
        if certify_schur(candidate, modulus=cfg.modulus) and not any(
            hom_dim(e, candidate, modulus=cfg.modulus) for e in simples
        ):
            return candidate
        logger.debug(f"Sample {attempt} of {tag} is not homogeneous, retrying")
    raise CertificationFailed(
        f"no homogeneous representation of dimension h in {cfg.retry_limit} samples "
        f"(tag {tag!r}, seed {cfg.seed})"
    )
