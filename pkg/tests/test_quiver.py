"""Tests for quivers, vectors, bilinear forms and JSON input."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import D4, K2
from pyqsi.exceptions import (
    CyclicQuiver,
    Disconnected,
    DuplicateId,
    IndexMismatch,
    QuiverFormatError,
)
from pyqsi.quiver import (
    DimensionVector,
    IntVector,
    apply_weight,
    euler_form,
    load_dimension_vector,
    load_quiver,
    quadratic_form,
    validate_quiver,
    weight_of_left_form,
    weight_of_right_form,
)

D4_QUIVER = validate_quiver(D4)
vectors = st.lists(st.integers(-20, 20), min_size=5, max_size=5).map(
    lambda xs: IntVector(tuple(xs))
)


class TestIntVector:
    """Test the integer vector arithmetic."""

    def test_arithmetic(self):
        """Test addition, subtraction, negation and scaling."""
        a, b = IntVector.of(1, 2), IntVector.of(3, -4)

        assert a + b == IntVector.of(4, -2)
        assert a - b == IntVector.of(-2, 6)
        assert -a == IntVector.of(-1, -2)
        assert 3 * a == IntVector.of(3, 6)
        assert a * 3 == IntVector.of(3, 6)
        assert a.dot(b) == -5

    def test_length_mismatch(self):
        """Test that vectors of different lengths cannot be combined."""
        with pytest.raises(IndexMismatch):
            IntVector.of(1, 2) + IntVector.of(1, 2, 3)

    def test_dimension_vector_is_nonnegative(self):
        """Test that a dimension vector rejects negative entries."""
        with pytest.raises(ValueError):
            DimensionVector.of(1, -1)

    def test_equality_ignores_subclass(self):
        """Test that equality and hashing only look at the entries."""
        assert DimensionVector.of(1, 2) == IntVector.of(1, 2)
        assert hash(DimensionVector.of(1, 2)) == hash(IntVector.of(1, 2))
        assert IntVector.of(0, 3) < IntVector.of(1, 0)

    def test_helpers(self):
        """Test the comparison helpers."""
        v = IntVector.of(0, 2)

        assert v.is_nonnegative()
        assert not v.is_zero()
        assert IntVector.zero(3).is_zero()
        assert IntVector.unit(3, 1) == IntVector.of(0, 1, 0)
        assert v.leq(IntVector.of(1, 2))
        assert DimensionVector.of(1, 2, 3).total() == 6


class TestValidateQuiver:
    """Test the validation of raw quiver descriptions."""

    def test_kronecker(self):
        """Test that the Kronecker quiver is valid."""
        q = validate_quiver(K2)

        assert q.vertices == ("1", "2")
        assert [(a.id, a.tail, a.head) for a in q.arrows] == [("a", 0, 1), ("b", 0, 1)]
        assert q.n == 2

    def test_topological_order(self):
        """Test that vertices are re-indexed in topological order."""
        q = validate_quiver(
            {"vertices": ["z", "a"], "arrows": [{"id": "x", "tail": "a", "head": "z"}]}
        )

        assert q.vertices == ("a", "z")
        assert q.index_of("z") == 1

    def test_cycle(self):
        """Test that a directed 2-cycle is rejected with its arrows."""
        raw = {
            "vertices": ["1", "2"],
            "arrows": [
                {"id": "a", "tail": "1", "head": "2"},
                {"id": "b", "tail": "2", "head": "1"},
            ],
        }

        with pytest.raises(CyclicQuiver) as info:
            validate_quiver(raw)
        assert set(info.value.cycle) == {"a", "b"}

    def test_disconnected(self):
        """Test that an isolated vertex is rejected."""
        raw = {"vertices": ["1", "2", "3"], "arrows": [{"id": "a", "tail": "1", "head": "2"}]}

        with pytest.raises(Disconnected):
            validate_quiver(raw)

    def test_duplicate_ids(self):
        """Test that repeated vertex and arrow ids are rejected."""
        with pytest.raises(DuplicateId):
            validate_quiver({"vertices": ["1", "1"], "arrows": []})
        with pytest.raises(DuplicateId):
            validate_quiver(
                {
                    "vertices": ["1", "2"],
                    "arrows": [
                        {"id": "a", "tail": "1", "head": "2"},
                        {"id": "a", "tail": "1", "head": "2"},
                    ],
                }
            )

    def test_malformed(self):
        """Test that malformed descriptions raise QuiverFormatError."""
        with pytest.raises(QuiverFormatError):
            validate_quiver({"vertices": ["1"]})
        with pytest.raises(QuiverFormatError):
            validate_quiver(
                {"vertices": ["1"], "arrows": [{"id": "a", "tail": "1", "head": "9"}]}
            )

    def test_to_dict_round_trip(self, d4):
        """Test that the JSON form validates back to the same quiver."""
        assert validate_quiver(d4.to_dict()) == d4

    def test_multigraph(self, k2):
        """Test the underlying multigraph keeps parallel arrows."""
        graph = k2.to_multigraph()

        assert graph.number_of_nodes() == 2
        assert graph.number_of_edges() == 2


class TestForms:
    """Test the Euler form and the weights derived from it."""

    def test_kronecker_values(self, k2):
        """Test <S1, S2> = -2 and <S2, S1> = 0 on the Kronecker quiver."""
        s1, s2 = k2.dimension_vector(1, 0), k2.dimension_vector(0, 1)

        assert euler_form(k2, s1, s2) == -2
        assert euler_form(k2, s2, s1) == 0
        assert quadratic_form(k2, k2.dimension_vector(1, 1)) == 0

    def test_wrong_length(self, k2):
        """Test that vectors of the wrong length are rejected."""
        with pytest.raises(IndexMismatch):
            euler_form(k2, IntVector.of(1, 0, 0), IntVector.of(1, 0))

    @settings(max_examples=50)
    @given(vectors, vectors, vectors)
    def test_bilinear(self, a, b, c):
        """Test linearity in both arguments."""
        q = D4_QUIVER

        assert euler_form(q, a + b, c) == euler_form(q, a, c) + euler_form(q, b, c)
        assert euler_form(q, a, b + c) == euler_form(q, a, b) + euler_form(q, a, c)

    @settings(max_examples=100)
    @given(vectors)
    def test_quadratic_form_semidefinite(self, a):
        """Test that the Tits form of a Euclidean quiver is nonnegative."""
        assert quadratic_form(D4_QUIVER, a) >= 0

    @settings(max_examples=50)
    @given(vectors, vectors)
    def test_weights_represent_the_form(self, a, b):
        """Test that the left and right weights pair like the Euler form."""
        q = D4_QUIVER

        assert apply_weight(weight_of_left_form(q, a), b) == euler_form(q, a, b)
        assert apply_weight(weight_of_right_form(q, b), a) == -euler_form(q, a, b)

    def test_defect_weight_kronecker(self, k2):
        """Test the weight of <h, -> on the Kronecker quiver."""
        assert weight_of_left_form(k2, k2.dimension_vector(1, 1)) == k2.weight(1, -1)


class TestParsing:
    """Test loading quivers and dimension vectors from JSON."""

    def test_load_quiver_from_file(self, quiver_file):
        """Test loading a quiver from a file."""
        q = load_quiver(quiver_file(K2))

        assert q.vertices == ("1", "2")

    def test_load_quiver_inline(self):
        """Test loading a quiver from inline JSON text."""
        q = load_quiver('{"vertices": ["1"], "arrows": []}')

        assert q.n == 1

    def test_malformed_json(self, tmp_path):
        """Test that broken JSON raises QuiverFormatError."""
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")

        with pytest.raises(QuiverFormatError):
            load_quiver(path)

    def test_missing_file(self, tmp_path):
        """Test that a missing file raises QuiverFormatError."""
        with pytest.raises(QuiverFormatError):
            load_quiver(tmp_path / "missing.json")

    def test_not_an_object(self):
        """Test that a JSON list is not a quiver."""
        with pytest.raises(QuiverFormatError):
            load_quiver("[1, 2]")

    def test_dimension_vector(self, d4):
        """Test that labels are mapped to the vertex order."""
        d = load_dimension_vector(d4, '{"z": 2, "a1": 1, "a2": 1, "b1": 1, "b2": 1}')

        assert d == DimensionVector.of(1, 1, 1, 1, 2)
        assert d4.vector_to_mapping(d) == {"a1": 1, "a2": 1, "b1": 1, "b2": 1, "z": 2}

    @pytest.mark.parametrize(
        "raw",
        [
            {"1": 1},
            {"1": 1, "2": 1, "3": 0},
            {"1": -1, "2": 1},
            {"1": True, "2": 1},
            {"1": 1.5, "2": 1},
        ],
    )
    def test_invalid_dimension_vector(self, k2, raw):
        """Test missing, unknown, negative and non-integer entries."""
        with pytest.raises(QuiverFormatError):
            load_dimension_vector(k2, raw)
