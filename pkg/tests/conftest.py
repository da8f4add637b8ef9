"""Shared quivers for the test suite."""

import json

import pytest
from hypothesis import strategies as st

from pyqsi.euclidean import simple_regular_orbits
from pyqsi.quiver import validate_quiver

K2 = {
    "vertices": ["1", "2"],
    "arrows": [
        {"id": "a", "tail": "1", "head": "2"},
        {"id": "b", "tail": "1", "head": "2"},
    ],
}

# Acyclic orientation of the triangle, tubes of rank 2 and 1
A2_ACYCLIC = {
    "vertices": ["1", "2", "3"],
    "arrows": [
        {"id": "a", "tail": "1", "head": "2"},
        {"id": "b", "tail": "2", "head": "3"},
        {"id": "c", "tail": "1", "head": "3"},
    ],
}

# Pentagon with a path of four arrows against one arrow, tubes of rank 4 and 1
A4_PATH = {
    "vertices": ["1", "2", "3", "4", "5"],
    "arrows": [
        {"id": "a", "tail": "1", "head": "2"},
        {"id": "b", "tail": "2", "head": "3"},
        {"id": "c", "tail": "3", "head": "4"},
        {"id": "d", "tail": "4", "head": "5"},
        {"id": "e", "tail": "1", "head": "5"},
    ],
}

# Four-subspace quiver, vertex order a1, a2, b1, b2, z
D4 = {
    "vertices": ["a1", "a2", "b1", "b2", "z"],
    "arrows": [
        {"id": "p1", "tail": "a1", "head": "z"},
        {"id": "p2", "tail": "a2", "head": "z"},
        {"id": "q1", "tail": "b1", "head": "z"},
        {"id": "q2", "tail": "b2", "head": "z"},
    ],
}

E6 = {
    "vertices": ["a1", "a2", "b1", "b2", "c1", "c2", "z"],
    "arrows": [
        {"id": "x1", "tail": "a1", "head": "a2"},
        {"id": "x2", "tail": "a2", "head": "z"},
        {"id": "y1", "tail": "b1", "head": "b2"},
        {"id": "y2", "tail": "b2", "head": "z"},
        {"id": "z1", "tail": "c1", "head": "c2"},
        {"id": "z2", "tail": "c2", "head": "z"},
    ],
}

A3_PATH = {
    "vertices": ["1", "2", "3"],
    "arrows": [
        {"id": "a", "tail": "1", "head": "2"},
        {"id": "b", "tail": "2", "head": "3"},
    ],
}

# Simple regular orbit families of D4, one pair per family
D4_FAMILIES = [
    [(0, 0, 1, 1, 1), (1, 1, 0, 0, 1)],
    [(0, 1, 0, 1, 1), (1, 0, 1, 0, 1)],
    [(0, 1, 1, 0, 1), (1, 0, 0, 1, 1)],
]


def family_labels(es, top=3):
    """Labels up to `top` with a zero on every polygon of `es`."""
    return st.tuples(
        *(
            st.lists(st.integers(0, top), min_size=u, max_size=u)
            .filter(lambda labels: min(labels) == 0)
            .map(tuple)
            for u in es.tube_ranks
        )
    )


@pytest.fixture(scope="session")
def k2():
    """Kronecker quiver."""
    return validate_quiver(K2)


@pytest.fixture(scope="session")
def a2():
    """Acyclic triangle."""
    return validate_quiver(A2_ACYCLIC)


@pytest.fixture(scope="session")
def a4():
    """Pentagon with a rank 4 tube."""
    return validate_quiver(A4_PATH)


@pytest.fixture(scope="session")
def d4():
    """Four-subspace quiver."""
    return validate_quiver(D4)


@pytest.fixture(scope="session")
def e6():
    """Star with three arms of length two."""
    return validate_quiver(E6)


@pytest.fixture(scope="session")
def k2_es(k2):
    """Euclidean structure of the Kronecker quiver."""
    return simple_regular_orbits(k2)


@pytest.fixture(scope="session")
def a2_es(a2):
    """Euclidean structure of the acyclic triangle."""
    return simple_regular_orbits(a2)


@pytest.fixture(scope="session")
def a4_es(a4):
    """Euclidean structure of the pentagon."""
    return simple_regular_orbits(a4)


@pytest.fixture(scope="session")
def d4_es(d4):
    """Euclidean structure of the four-subspace quiver."""
    return simple_regular_orbits(d4)


@pytest.fixture(scope="session")
def e6_es(e6):
    """Euclidean structure of the three-arm star."""
    return simple_regular_orbits(e6)


@pytest.fixture
def quiver_file(tmp_path):
    """Write a quiver description to a JSON file and return its path."""

    def write(raw, name="quiver.json"):
        path = tmp_path / name
        path.write_text(json.dumps(raw), encoding="utf-8")
        return path

    return write
