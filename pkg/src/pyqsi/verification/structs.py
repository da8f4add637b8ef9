"""Configuration and report structures of the verification harness.

Classes:
    SamplerConfig: Seed and bounds of the random sampler.
    RankReport: Outcome of a weight space dimension estimate.
    CheckResult: Outcome of one check.
    VerificationReport: All checks of one run.
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import Any

# ✅ Standard library imports
from dataclasses import dataclass, field, replace

# ✅ Third-party imports
from sympy import isprime

# ✅ Local imports
from pyqsi.defaults import Defaults


@dataclass(frozen=True)
class SamplerConfig:
    """Seed and bounds of the random sampler.

    Attributes:
        seed: Root seed; every random choice derives from it.
        entry_bound: Matrix entries of sampled modules lie in
            [-entry_bound, entry_bound].
        trials: Number of samples per side of a rank oracle.
        retry_limit: Attempts to find a Schur sample before giving up.
        identity_bound: Entry bound of the evaluation points of polynomial identities.
        modulus: Optional prime for modular screening of ranks and determinants.
        workers: Number of threads for independent checks.
    """

    seed: int = Defaults.SEED
    entry_bound: int = Defaults.ENTRY_BOUND
    trials: int = Defaults.TRIALS
    retry_limit: int = Defaults.RETRY_LIMIT
    identity_bound: int = Defaults.IDENTITY_BOUND
    modulus: int | None = None
    workers: int = Defaults.WORKERS

    def __post_init__(self) -> None:  # noqa: D105
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")
        for name in (
            "entry_bound", "trials", "retry_limit", "identity_bound", "workers"
        ):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.modulus is not None and not isprime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    def with_trials(self, trials: int) -> SamplerConfig:
        """Copy with a different number of trials."""
        return replace(self, trials=trials)


@dataclass(frozen=True)
class RankReport:
    """Result of a rank based weight space dimension estimate.

    The rank is a certified lower bound for the dimension; it equals the dimension
    for generic samples. The control block uses the leading half of the samples on
    each side, so the full matrix doubles the samples of the control.

    Attributes:
        estimated_dim: Rank of the full evaluation matrix.
        samples_used: Samples per side of the full matrix.
        shape: Shape of the full evaluation matrix.
        half_rank: Rank of the control block, the leading `max(1, samples_used // 2)`
            rows and columns.
        digest: Hash of the evaluation matrix.
    """

    estimated_dim: int
    samples_used: int
    shape: tuple[int, int]
    half_rank: int
    digest: str

    @property
    def stable(self) -> bool:
        """Whether the full matrix has no more rank than the half-sample control."""
        return self.half_rank == self.estimated_dim

    def to_dict(self) -> dict[str, Any]:  # noqa: D102
        return {
            "estimated_dim": self.estimated_dim,
            "half_rank": self.half_rank,
            "samples_used": self.samples_used,
            "shape": list(self.shape),
            "stable": self.stable,
            "digest": self.digest,
            "note": "rank is a certified lower bound; "
            "equality holds for generic samples",
        }


@dataclass
class CheckResult:
    """Outcome of one verification check.

    Attributes:
        name: Check name, e.g. `binomial_law[m=2]`.
        passed: Verdict.
        detail: Human readable explanation.
        witnesses: Data needed to replay or inspect the check.
        seconds: Wall time, filled in by the harness.
    """

    name: str
    passed: bool
    detail: str = ""
    witnesses: dict[str, Any] = field(default_factory=dict)
    seconds: float | None = None

    def to_dict(self, timings: bool = False) -> dict[str, Any]:  # noqa: D102
        data: dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "witnesses": self.witnesses,
        }
        if timings and self.seconds is not None:
            data["seconds"] = round(self.seconds, 6)
        return data


@dataclass
class VerificationReport:
    """Aggregated verification outcome.

    Attributes:
        seed: Root seed of the run.
        checks: Individual results, in execution order.
    """

    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True iff every check passed."""
        return all(c.passed for c in self.checks)

    def add(self, check: CheckResult) -> None:  # noqa: D102
        self.checks.append(check)

    def extend(self, other: VerificationReport) -> None:  # noqa: D102
        self.checks.extend(other.checks)

    def failed(self) -> list[CheckResult]:  # noqa: D102
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> CheckResult:
        """Look a check up by name."""
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        """JSON-ready report; timings are only included on request."""
        return {
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.to_dict(timings=timings) for c in self.checks],
        }

    def to_text(self) -> str:
        """Human readable rendering."""
        lines = [f"seed {self.seed}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)
