"""Tests for the generators, relations and classification of SI(Q, d)."""

import json

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import family_labels
from pyqsi.exceptions import DenseOrbitCase, NotRegular, QuiverFormatError
from pyqsi.presentation import (
    Classification,
    GeneratorKind,
    Presentation,
    Relation,
    classify_algebra,
    eliminate,
    generators,
    presentation,
    relations,
    weight_space_dim_formula,
)
from pyqsi.quiver import DimensionVector, apply_weight
from pyqsi.tubes import CanonicalDecomposition


def kinds(result):
    """Number of homogeneous and of arc generators."""
    homogeneous = [g for g in result.generators if g.kind is GeneratorKind.HOMOGENEOUS]
    return len(homogeneous), len(result.generators) - len(homogeneous)


class TestFourSubspace:
    """Test presentations on the four-subspace quiver."""

    def test_radical(self, d4_es):
        """Test that d = h gives a hypersurface with three relations."""
        result = presentation(d4_es, d4_es.h)

        assert result.p == 1
        assert kinds(result) == (2, 6)
        assert [r.lhs for r in result.relations] == [("c0",), ("c1",), ("c0", "c1")]
        assert [r.family for r in result.relations] == [0, 1, 2]
        assert result.classification is Classification.HYPERSURFACE
        assert result.warnings == ()

    def test_twice_radical(self, d4_es):
        """Test that d = 2h gives a polynomial ring."""
        result = presentation(d4_es, (2 * d4_es.h).as_dimension_vector())

        assert result.p == 2
        assert len(result.generators) == 9
        assert [r.lhs for r in result.relations] == [("c0",), ("c2",), ("c0", "c1", "c2")]
        assert result.classification is Classification.POLYNOMIAL_RING
        assert (result.weight_space_dims[1], result.weight_space_dims[2]) == (3, 6)

    def test_labelled(self, d4_es):
        """Test h plus a simple regular: one family loses its arcs and relation."""
        result = presentation(d4_es, DimensionVector.of(2, 2, 1, 1, 3))

        assert result.p == 1
        assert kinds(result) == (2, 4)
        assert {g.family for g in result.generators if g.arc is not None} == {1, 2}
        assert len(result.relations) == 2
        assert result.classification is Classification.POLYNOMIAL_RING
        assert len(result.warnings) == 1

    def test_relation_arcs_cover_h(self, d4_es):
        """Test that each relation multiplies arcs whose dimensions add up to h."""
        result = presentation(d4_es, d4_es.h)

        for relation in result.relations:
            dims = [result.generator(i).dimension for i in relation.rhs]
            assert dims[0] + dims[1] == d4_es.h

    def test_weights_vanish_on_d(self, d4_es):
        """Test that every generator weight pairs to zero with d."""
        d = DimensionVector.of(2, 2, 1, 1, 3)

        for g in presentation(d4_es, d).generators:
            assert apply_weight(g.weight, d) == 0

    def test_dense_case(self, d4_es):
        """Test that p = 0 is reported without generators."""
        d = DimensionVector.of(0, 0, 1, 1, 1)
        result = presentation(d4_es, d)

        assert result.p == 0
        assert result.generators == ()
        assert result.classification is Classification.DENSE_ORBIT_POLYNOMIAL
        assert set(result.weight_space_dims.values()) == {1}
        with pytest.raises(DenseOrbitCase):
            generators(d4_es, d)

    def test_not_regular(self, d4_es):
        """Test that a non-regular d has no p and a warning."""
        d = DimensionVector.of(1, 0, 0, 0, 0)
        result = presentation(d4_es, d)

        assert result.p is None
        assert result.classification is Classification.DENSE_ORBIT_POLYNOMIAL
        assert result.warnings[0].startswith("not regular")
        assert classify_algebra(d4_es, d) is Classification.DENSE_ORBIT_POLYNOMIAL
        with pytest.raises(NotRegular):
            relations(d4_es, d)


class TestOtherQuivers:
    """Test presentations on the Kronecker quiver, the triangle and the pentagon."""

    def test_kronecker(self, k2_es):
        """Test that 3h on the Kronecker quiver is a polynomial ring in c_0..c_3."""
        result = presentation(k2_es, DimensionVector.of(3, 3))

        assert [g.id for g in result.generators] == ["c0", "c1", "c2", "c3"]
        assert result.relations == ()
        assert result.classification is Classification.POLYNOMIAL_RING
        assert result.weight_space_dims == {0: 1, 1: 4, 2: 10, 3: 20, 4: 35}

    def test_triangle(self, a2_es):
        """Test d = h on the acyclic triangle."""
        result = presentation(a2_es, a2_es.h)

        assert kinds(result) == (2, 2)
        assert len(result.relations) == 1
        assert result.classification is Classification.POLYNOMIAL_RING

    def test_pentagon(self, a4_es):
        """Test labels (2, 1, 0, 1): one arc generator and no relation."""
        d = CanonicalDecomposition(a4_es.h, 1, ((2, 1, 0, 1),)).reconstruct(a4_es)
        result = presentation(a4_es, d)

        assert [g.id for g in result.generators] == ["c0", "c1", "E:0:3:1"]
        assert result.generator("E:0:3:1").name == "E_{0,3}"
        assert result.relations == ()
        assert result.classification is Classification.POLYNOMIAL_RING
        assert "single zero label" in result.warnings[0]

    def test_weight_space_bound(self, k2_es):
        """Test that the listed weight spaces follow the bound."""
        result = presentation(k2_es, DimensionVector.of(1, 1), weight_space_bound=2)

        assert result.weight_space_dims == {0: 1, 1: 2, 2: 3}

    @pytest.mark.parametrize("p", [1, 2])
    @pytest.mark.parametrize("name", ["k2_es", "a2_es", "d4_es", "e6_es"])
    def test_multiples_of_radical(self, request, name, p):
        """Test that p h is a polynomial ring or a hypersurface."""
        es = request.getfixturevalue(name)
        d = (p * es.h).as_dimension_vector()
        result = presentation(es, d)

        assert result.classification in {
            Classification.POLYNOMIAL_RING,
            Classification.HYPERSURFACE,
        }
        assert result.weight_space_dims[1] == p + 1
        assert all(apply_weight(g.weight, d) == 0 for g in result.generators)

    @settings(max_examples=30, deadline=None)
    @given(st.data())
    def test_labelled_vectors(self, a2_es, e6_es, data):
        """Test the classification and the weights on labelled vectors of A~2 and E~6."""
        es = data.draw(st.sampled_from([a2_es, e6_es]))
        p = data.draw(st.integers(1, 2))
        d = CanonicalDecomposition(es.h, p, data.draw(family_labels(es))).reconstruct(es)
        result = presentation(es, d)

        assert result.classification in {
            Classification.POLYNOMIAL_RING,
            Classification.HYPERSURFACE,
        }
        assert classify_algebra(es, d) is result.classification
        assert all(apply_weight(g.weight, d) == 0 for g in result.generators)


class TestElimination:
    """Test the symbolic elimination of homogeneous generators."""

    def test_single_relation(self):
        """Test that one relation is solved for its homogeneous generator."""
        rel = Relation(("c0",), ("E:0:0:1", "E:0:1:0"), 0)

        assert eliminate(["c0", "c1", "E:0:0:1", "E:0:1:0"], [rel]) == []

    def test_surviving_relation(self):
        """Test that three relations in two homogeneous generators leave one."""
        ids = ["c0", "c1", "a", "b", "u", "v", "x", "y"]
        rels = [
            Relation(("c0",), ("a", "b"), 0),
            Relation(("c1",), ("u", "v"), 1),
            Relation(("c0", "c1"), ("x", "y"), 2),
        ]

        (survivor,) = eliminate(ids, rels)
        assert survivor.free_symbols == set(sympy.symbols("a b u v x y"))

    def test_arc_only_relation(self):
        """Test that a relation without homogeneous generators survives."""
        assert len(eliminate(["a", "b"], [Relation((), ("a", "b"), 0)])) == 1


class TestFormulaAndSerialization:
    """Test the weight space formula and the JSON form."""

    def test_formula(self):
        """Test binomial(p + m, m)."""
        assert weight_space_dim_formula(2, 2) == 6
        assert weight_space_dim_formula(0, 5) == 1
        with pytest.raises(ValueError):
            weight_space_dim_formula(-1, 1)

    def test_round_trip(self, d4, d4_es):
        """Test that a presentation survives a trip through JSON text."""
        result = presentation(d4_es, DimensionVector.of(2, 2, 1, 1, 3))
        data = json.loads(json.dumps(result.to_dict(d4)))

        assert Presentation.from_dict(d4, data) == result
        assert list(data) == [
            "d",
            "p",
            "generators",
            "relations",
            "classification",
            "weight_space_dims",
            "warnings",
        ]

    def test_missing_key(self, d4, d4_es):
        """Test that an incomplete dictionary is rejected."""
        data = presentation(d4_es, d4_es.h).to_dict(d4)
        del data["relations"]

        with pytest.raises(QuiverFormatError):
            Presentation.from_dict(d4, data)

    def test_text(self, d4, d4_es):
        """Test the human readable rendering."""
        text = presentation(d4_es, d4_es.h).to_text(d4)

        assert "classification: Hypersurface" in text
        assert "  c_0 = E_{0,0} * E_{1,1}" in text
        assert "  c_0 + c_1 = E''_{0,0} * E''_{1,1}" in text

    def test_unknown_generator(self, d4_es):
        """Test that looking up an unknown id raises KeyError."""
        with pytest.raises(KeyError):
            presentation(d4_es, d4_es.h).generator("c9")
