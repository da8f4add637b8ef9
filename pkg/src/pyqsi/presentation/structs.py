"""Data structures describing a presentation of SI(Q, d).

Classes:
    GeneratorKind: Arc generator or homogeneous basis element.
    Classification: Shape of the algebra.
    Generator: One generator with its weight.
    Relation: One relation `sum of c_k = product of arc generators`.
    Presentation: Generators, relations, classification and weight space dimensions.
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from pyqsi.quiver.quiver import Quiver

# ✅ Standard library imports
from dataclasses import dataclass, field
from enum import Enum

# ✅ Local imports
from pyqsi.exceptions.quiver_error import QuiverFormatError
from pyqsi.quiver.vectors import DimensionVector, Weight
from pyqsi.tubes.polygons import Arc


class GeneratorKind(Enum):
    """Kind of a generator."""

    ARC = "arc"
    HOMOGENEOUS = "homogeneous"


class Classification(Enum):
    """Shape of the algebra SI(Q, d)."""

    POLYNOMIAL_RING = "PolynomialRing"
    HYPERSURFACE = "Hypersurface"
    DENSE_ORBIT_POLYNOMIAL = "DenseOrbitPolynomial"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class Generator:
    """A generator of SI(Q, d).

    Attributes:
        id: Stable id, `c<k>` or `E:<family>:<start>:<end>`.
        kind: Arc generator or homogeneous basis element.
        name: Display name such as `c_0` or `E'_{0,1}`.
        weight: Its weight; the defect weight for homogeneous generators.
        arc: The admissible arc of an arc generator.
        dimension: Dimension vector of the arc module.
        index: k for the homogeneous generator c_k.
    """

    id: str
    kind: GeneratorKind
    name: str
    weight: Weight
    arc: Arc | None = None
    dimension: DimensionVector | None = None
    index: int | None = None

    @property
    def family(self) -> int | None:  # noqa: D102
        return None if self.arc is None else self.arc.family

    def to_dict(self, q: Quiver) -> dict[str, Any]:  # noqa: D102
        return {
            "id": self.id,
            "kind": self.kind.value,
            "name": self.name,
            "family": self.family,
            "arc": None if self.arc is None else [self.arc.start, self.arc.end],
            "u": None if self.arc is None else self.arc.u,
            "index": self.index,
            "dim": None
            if self.dimension is None
            else q.vector_to_mapping(self.dimension),
            "weight": q.vector_to_mapping(self.weight),
        }

    @classmethod
    def from_dict(cls, q: Quiver, data: dict[str, Any]) -> Generator:  # noqa: D102
        arc = None
        if data["arc"] is not None:
            arc = Arc(data["family"], data["arc"][0], data["arc"][1], data["u"])
        dimension = None if data["dim"] is None else q.vector_from_mapping(data["dim"])
        return cls(
            id=data["id"],
            kind=GeneratorKind(data["kind"]),
            name=data["name"],
            weight=q.weight_from_mapping(data["weight"]),
            arc=arc,
            dimension=dimension,
            index=data["index"],
        )


@dataclass(frozen=True)
class Relation:
    """The relation `sum(lhs) = prod(rhs)` contributed by one family.

    Attributes:
        lhs: Ids of homogeneous generators, summed.
        rhs: Ids of arc generators, multiplied; their dimensions add up to h.
        family: Index of the contributing family.
    """

    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    family: int

    def to_dict(self) -> dict[str, Any]:  # noqa: D102
        return {"lhs": list(self.lhs), "rhs": list(self.rhs), "family": self.family}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Relation:  # noqa: D102
        return cls(tuple(data["lhs"]), tuple(data["rhs"]), data["family"])


@dataclass(frozen=True)
class Presentation:
    """Presentation of SI(Q, d).

    Attributes:
        d: The dimension vector.
        p: Multiplicity of h in the canonical decomposition, `None` if d is not regular.
        generators: Homogeneous generators c_0..c_p, then arc generators.
        relations: One relation per family with a zero-level partition.
        classification: Shape of the algebra.
        weight_space_dims: m -> dim SI(Q, d)_{m defect} for m up to the
            configured bound.
        warnings: Degenerate situations met while assembling.
    """

    d: DimensionVector
    p: int | None
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...]
    classification: Classification
    weight_space_dims: dict[int, int] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    def generator(self, generator_id: str) -> Generator:
        """Look a generator up by id."""
        for g in self.generators:
            if g.id == generator_id:
                return g
        raise KeyError(generator_id)

    ########## Serialization ##########

    def to_dict(self, q: Quiver) -> dict[str, Any]:
        """JSON-ready dictionary with a deterministic key order."""
        return {
            "d": q.vector_to_mapping(self.d),
            "p": self.p,
            "generators": [g.to_dict(q) for g in self.generators],
            "relations": [r.to_dict() for r in self.relations],
            "classification": self.classification.value,
            "weight_space_dims": {
                str(m): k for m, k in sorted(self.weight_space_dims.items())
            },
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, q: Quiver, data: dict[str, Any]) -> Presentation:
        """Inverse of `to_dict`.

        Raises:
            QuiverFormatError: If a required key is missing.
        """
        try:
            return cls(
                d=q.vector_from_mapping(data["d"]),
                p=data["p"],
                generators=tuple(Generator.from_dict(q, g) for g in data["generators"]),
                relations=tuple(Relation.from_dict(r) for r in data["relations"]),
                classification=Classification(data["classification"]),
                weight_space_dims={
                    int(m): k for m, k in data["weight_space_dims"].items()
                },
                warnings=tuple(data["warnings"]),
            )
        except KeyError as e:
            raise QuiverFormatError(f"presentation is missing {e}") from e

    def to_text(self, q: Quiver) -> str:
        """Human readable rendering."""
        names = {g.id: g.name for g in self.generators}
        lines = [
            f"d = {q.vector_to_mapping(self.d)}",
            f"p = {self.p}",
            f"classification: {self.classification.value}",
        ]
        if self.generators:
            lines.append("generators:")
            for g in self.generators:
                dim = (
                    ""
                    if g.dimension is None
                    else f"  dim {q.vector_to_mapping(g.dimension)}"
                )
                lines.append(f"  {g.name}{dim}  weight {q.vector_to_mapping(g.weight)}")
        if self.relations:
            lines.append("relations:")
            for r in self.relations:
                lhs = " + ".join(names[i] for i in r.lhs)
                rhs = " * ".join(names[i] for i in r.rhs)
                lines.append(f"  {lhs} = {rhs}")
        if self.weight_space_dims:
            dims = ", ".join(
                f"{m}: {k}" for m, k in sorted(self.weight_space_dims.items())
            )
            lines.append(f"dim SI(Q,d)_(m*defect): {dims}")
        lines.extend(f"warning: {w}" for w in self.warnings)
        return "\n".join(lines)
