"""The `qsi` command line front end.

Subcommands:
    classify: Graph class and diagram type of the quiver.
    orbits: Radical generator and simple regular orbit families.
    decompose: Canonical and generic decomposition of a dimension vector.
    arcs: Labeled polygons with their admissible arcs.
    presentation: Generators, relations and classification of SI(Q, d).
    verify: Randomized exact verification of the presentation.

Exit codes are 0 on success, 1 for invalid input and 2 when a verification
check fails. Results go to stdout, log messages and errors to stderr.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING, Any, NoReturn

if TYPE_CHECKING:
    from collections.abc import Sequence

    from pyqsi.euclidean.structure import EuclideanStructure
    from pyqsi.quiver.quiver import Quiver
    from pyqsi.quiver.vectors import DimensionVector

# ✅ Standard library imports
import argparse
from dataclasses import dataclass
import json
import logging
import os
import sys

# ✅ Third-party imports
from sympy import isprime, prevprime

# ✅ Local imports
from pyqsi.constants import Constants
from pyqsi.defaults import Defaults
from pyqsi.euclidean.classification import classify_graph
from pyqsi.euclidean.structure import CoxeterOrder, simple_regular_orbits
from pyqsi.exceptions.qsi_error import QsiError
from pyqsi.presentation.assembly import presentation
from pyqsi.quiver.parsing import load_dimension_vector, load_quiver
from pyqsi.tubes.decomposition import canonical_decomposition, generic_decomposition
from pyqsi.tubes.polygons import admissible_arcs, labeled_polygons, min_level_partition
from pyqsi.verification.harness import verify_presentation
from pyqsi.verification.structs import SamplerConfig

logger = logging.getLogger(__name__)

COMMANDS = ("classify", "orbits", "decompose", "arcs", "presentation", "verify")
NEEDS_DIM = ("decompose", "arcs", "presentation", "verify")


class InputError(Exception):
    """Invalid command line input; reported with exit code 1."""


class _Parser(argparse.ArgumentParser):
    """Argument parser exiting with the input error code."""

    def error(self, message: str) -> NoReturn:  # noqa: D102
        self.print_usage(sys.stderr)
        self.exit(Constants.EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class CliConfig:
    """Settings of one `qsi` invocation.

    Attributes:
        command: Subcommand name.
        input: Quiver JSON path or inline JSON.
        dim: Dimension vector JSON path or inline JSON.
        format: `json`, `text` or (for `arcs`) `dot`.
        seed: Root seed of the sampler.
        trials: Samples per side of the rank oracles.
        entry_bound: Entry bound of sampled modules.
        modulus: Screening prime, if any.
        m_max: Largest multiple of the defect checked by `verify`.
        timings: Include timings in the verification report.
        verbosity: 0 warnings, 1 info, 2 debug.
        coxeter_order: Composition order of the Coxeter transformation.
        workers: Threads used by `verify`.
    """

    command: str
    input: str
    dim: str | None = None
    format: str = "json"
    seed: int = Defaults.SEED
    trials: int = Defaults.TRIALS
    entry_bound: int = Defaults.ENTRY_BOUND
    modulus: int | None = None
    m_max: int = Defaults.M_MAX
    timings: bool = False
    verbosity: int = 0
    coxeter_order: CoxeterOrder = CoxeterOrder.SINK_FIRST
    workers: int = Defaults.WORKERS

    def __post_init__(self) -> None:  # noqa: D105
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.command in NEEDS_DIM and self.dim is None:
            raise InputError(f"{self.command} needs --dim")
        if self.format == "dot" and self.command != "arcs":
            raise InputError("--format dot is only available for arcs")
        if self.modulus is not None and not isprime(self.modulus):
            raise InputError(f"--modulus {self.modulus} is not prime")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> CliConfig:
        """Build the configuration from parsed arguments and the environment."""
        return cls(
            command=args.command,
            input=args.input,
            dim=args.dim,
            format=args.format,
            seed=args.seed,
            trials=args.trials,
            entry_bound=args.entry_bound,
            modulus=args.modulus,
            m_max=args.m_max,
            timings=args.timings,
            verbosity=args.verbose,
            coxeter_order=CoxeterOrder(args.coxeter_order),
            workers=_workers_from_env(),
        )

    def sampler(self) -> SamplerConfig:
        """Sampler configuration of `verify`."""
        return SamplerConfig(
            seed=self.seed,
            entry_bound=self.entry_bound,
            trials=self.trials,
            modulus=self.modulus,
            workers=self.workers,
        )


def _workers_from_env() -> int:
    raw = os.environ.get(Constants.THREADS_ENV)
    if raw is None:
        return Defaults.WORKERS
    try:
        workers = int(raw)
    except ValueError:
        raise InputError(f"{Constants.THREADS_ENV}={raw!r} is not an integer") from None
    if workers < 1:
        raise InputError(f"{Constants.THREADS_ENV} must be at least 1, got {workers}")
    return workers


def _modulus(value: str) -> int:
    if value == "auto":
        return int(prevprime(2**Constants.SCREENING_PRIME_BITS))
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{value!r} is neither a prime nor 'auto'"
        ) from None


def _positive(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from None
    if number < 1:
        raise argparse.ArgumentTypeError(f"{value!r} is not positive")
    return number


def _nonnegative(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from None
    if number < 0:
        raise argparse.ArgumentTypeError(f"{value!r} is negative")
    return number


def build_parser() -> argparse.ArgumentParser:
    """The `qsi` argument parser."""
    common = _Parser(add_help=False)
    common.add_argument(
        "--input", required=True, help="quiver JSON file or inline JSON"
    )
    common.add_argument("--dim", help="dimension vector JSON file or inline JSON")
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument(
        "--coxeter-order",
        choices=[o.value for o in CoxeterOrder],
        default=Constants.COXETER_ORDER,
    )
    common.add_argument("--seed", type=_nonnegative, default=Defaults.SEED)
    common.add_argument("--trials", type=_positive, default=Defaults.TRIALS)
    common.add_argument("--entry-bound", type=_positive, default=Defaults.ENTRY_BOUND)
    common.add_argument(
        "--modulus", type=_modulus, default=None, help="screening prime or 'auto'"
    )
    common.add_argument("--m-max", type=_nonnegative, default=Defaults.M_MAX)
    common.add_argument("--timings", action="store_true", help="add timings to verify")

    parser = _Parser(
        prog="qsi",
        description="Semi-invariants of Euclidean quivers and their verification.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        commands.add_parser(name, parents=[common])
    return parser


########## Renderers ##########


def _emit(data: Any, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _orbits_text(es: EuclideanStructure) -> str:
    q = es.quiver
    lines = [f"{es.graph_class}", f"h = {q.vector_to_mapping(es.h)}"]
    for f, family in enumerate(es.families):
        lines.append(f"family {f} (u = {family.u}):")
        lines.extend(
            f"  e_{k} = {q.vector_to_mapping(e)}" for k, e in enumerate(family)
        )
    return "\n".join(lines)


def _arcs_data(es: EuclideanStructure, d: DimensionVector) -> list[dict[str, Any]]:
    cd = canonical_decomposition(es, d)
    data = []
    for poly in labeled_polygons(es, cd):
        partition = min_level_partition(poly)
        data.append(
            {
                "family": poly.family,
                "u": poly.u,
                "labels": list(poly.labels),
                "admissible": [arc.id for arc in admissible_arcs(poly)],
                "zero_level_partition": None
                if partition is None
                else [arc.id for arc in partition],
            }
        )
    return data


def _arcs_text(data: list[dict[str, Any]]) -> str:
    lines = []
    for poly in data:
        lines.append(
            f"family {poly['family']} (u = {poly['u']}), labels {poly['labels']}"
        )
        lines.append(f"  admissible: {', '.join(poly['admissible']) or '-'}")
        partition = poly["zero_level_partition"]
        zero_level = "-" if partition is None else ", ".join(partition)
        lines.append(f"  zero level: {zero_level}")
    return "\n".join(lines)


def _arcs_dot(data: list[dict[str, Any]]) -> str:
    lines = ["digraph polygons {"]
    for poly in data:
        f, u = poly["family"], poly["u"]
        lines.append(f'  subgraph cluster_{f} {{\n    label="family {f}";')
        for k, label in enumerate(poly["labels"]):
            lines.append(f'    "{f}:{k}" [label="{k} ({label})"];')
        for k in range(u):
            lines.append(f'    "{f}:{k}" -> "{f}:{(k + 1) % u}" [label="e{k}"];')
        for arc_id in poly["admissible"]:
            _, _, s, t = arc_id.split(Constants.ID_SEPARATOR)
            lines.append(
                f'    "{f}:{s}" -> "{f}:{t}" [style=dashed, label="{arc_id}"];'
            )
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines)


def _decompose(
    es: EuclideanStructure, d: DimensionVector
) -> tuple[dict[str, Any], str]:
    q = es.quiver
    cd = canonical_decomposition(es, d)
    gd = generic_decomposition(es, cd)
    data = {**cd.to_dict(es), "generic": gd.to_dict(es)}
    lines = [f"d = {q.vector_to_mapping(d)}", f"p = {cd.p}"]
    lines.extend(f"family {f}: labels {list(c)}" for f, c in enumerate(cd.coefficients))
    lines.append("generic summands:")
    lines.extend(
        f"  {s['multiplicity']} x {s['dim']}" + (f"  ({s['arc']})" if s["arc"] else "")
        for s in data["generic"]
    )
    return data, "\n".join(lines)


def _check_modulus(cfg: CliConfig, es: EuclideanStructure, d: DimensionVector) -> None:
    if cfg.modulus is None:
        return
    size = sum(cfg.m_max * hx * dx for hx, dx in zip(es.h, d, strict=True))
    if cfg.modulus <= 2 * cfg.entry_bound * size:
        raise InputError(
            f"--modulus {cfg.modulus} is too small for matrices of size {size}; "
            f"it must exceed {2 * cfg.entry_bound * size}"
        )


########## Main Methods ##########


def _dispatch(cfg: CliConfig) -> int:
    q: Quiver = load_quiver(cfg.input)
    if cfg.command == "classify":
        graph_class = classify_graph(q)
        _emit(graph_class.to_dict(), str(graph_class), cfg.format)
        return Constants.EXIT_OK

    es = simple_regular_orbits(q, cfg.coxeter_order)
    if cfg.command == "orbits":
        _emit(es.to_dict(), _orbits_text(es), cfg.format)
        return Constants.EXIT_OK

    assert cfg.dim is not None
    d = load_dimension_vector(q, cfg.dim)
    if cfg.command == "decompose":
        data, text = _decompose(es, d)
        _emit(data, text, cfg.format)
    elif cfg.command == "arcs":
        data = _arcs_data(es, d)
        if cfg.format == "dot":
            print(_arcs_dot(data))
        else:
            _emit(data, _arcs_text(data), cfg.format)
    elif cfg.command == "presentation":
        result = presentation(es, d)
        _emit(result.to_dict(q), result.to_text(q), cfg.format)
    else:
        _check_modulus(cfg, es, d)
        report = verify_presentation(es, d, cfg.sampler(), m_max=cfg.m_max)
        _emit(report.to_dict(timings=cfg.timings), report.to_text(), cfg.format)
        if not report.passed:
            return Constants.EXIT_VERIFICATION_FAILED
    return Constants.EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    """Run `qsi` with the given arguments.

    Args:
        argv: Arguments without the program name, `sys.argv[1:]` when omitted.

    Returns:
        The exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else Constants.EXIT_INPUT_ERROR

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )

    try:
        cfg = CliConfig.from_args(args)
        return _dispatch(cfg)
    except (InputError, QsiError) as e:
        logger.debug(f"Input error: {e!r}")
        print(f"qsi: error: {e}", file=sys.stderr)
        return Constants.EXIT_INPUT_ERROR


def main() -> None:
    """Console script entry point."""
    sys.exit(run())
