"""Semi-invariants of Euclidean quivers.

Modules:
    quiver: Quivers, dimension vectors, weights, Euler form and JSON input.
    euclidean: Graph class, radical, defect, Coxeter transformation and orbits.
    tubes: Canonical and generic decompositions, labeled polygons and arcs.
    presentation: Generators, relations and classification of SI(Q, d).
    schofield: Exact matrices, representations and Schofield semi-invariants.
    verification: Seeded randomized oracles checking a presentation.
    cli: The `qsi` command line front end.

The usual entry points are [simple_regular_orbits][pyqsi.simple_regular_orbits]
followed by [presentation][pyqsi.presentation.presentation] and
[verify_presentation][pyqsi.verify_presentation].
"""

from .euclidean import classify_graph, simple_regular_orbits
from .presentation import Presentation
from .quiver import Quiver, load_dimension_vector, load_quiver
from .verification import SamplerConfig, verify_presentation

__all__: list[str] = [
    # Input
    "Quiver",
    "load_dimension_vector",
    "load_quiver",
    # Structure
    "classify_graph",
    "simple_regular_orbits",
    # Presentation and verification
    "Presentation",
    "SamplerConfig",
    "verify_presentation",
    "__version__",
]


from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("pyqsi")
except PackageNotFoundError:
    __version__ = "0.0.0"  # fallback for local dev
