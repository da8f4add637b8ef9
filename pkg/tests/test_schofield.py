"""Tests for exact matrices, representations and Schofield semi-invariants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyqsi.exceptions import NotOrthogonal, NotSquare, QuiverMismatch, SingularBlock
from pyqsi.quiver import (
    DimensionVector,
    IntVector,
    euler_form,
    weight_of_left_form,
    weight_of_right_form,
)
from pyqsi.schofield import (
    ExactMatrix,
    GroupElement,
    Representation,
    act,
    build_dvw,
    character_value,
    det_exact,
    ext_dim,
    hom_dim,
    kernel_dim,
    rank_exact,
    schofield_vanishes,
    schofield_value,
    schofield_value_lower,
    schofield_value_mod,
)
from pyqsi.verification import SamplerConfig, sample_group_element, sample_representation

CFG = SamplerConfig(seed=7)

square_3x3 = st.lists(
    st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3
)


def laplace_det(rows):
    """Determinant by cofactor expansion along the first row."""
    if not rows:
        return 1
    return sum(
        (-1) ** j * rows[0][j] * laplace_det([r[:j] + r[j + 1 :] for r in rows[1:]])
        for j in range(len(rows))
    )


def kronecker(k2, a, b):
    """Representation of dimension (1, 1) with scalars a and b on the two arrows."""
    return Representation.from_arrow_maps(
        k2, k2.dimension_vector(1, 1), {"a": [[a]], "b": [[b]]}
    )


class TestExactMatrix:
    """Test the exact rational matrix."""

    def test_det(self):
        """Test integer and rational determinants."""
        assert ExactMatrix.from_rows([[1, 2], [3, 4]]).det() == -2
        assert ExactMatrix.from_rows([[Fraction(1, 2), 1], [1, 4]]).det() == 1
        assert det_exact(ExactMatrix.identity(3)) == 1
        assert ExactMatrix.zeros(0, 0).det() == 1

    @settings(max_examples=50)
    @given(square_3x3)
    def test_det_matches_cofactors(self, rows):
        """Test the determinant against a cofactor expansion."""
        assert ExactMatrix.from_rows(rows).det() == laplace_det(rows)

    @settings(max_examples=50)
    @given(square_3x3)
    def test_det_mod_matches_det(self, rows):
        """Test that the determinant modulo a prime is the reduced determinant."""
        assert ExactMatrix.from_rows(rows).det_mod(101) == laplace_det(rows) % 101

    def test_not_square(self):
        """Test that determinants need a square matrix."""
        m = ExactMatrix.zeros(2, 3)

        with pytest.raises(NotSquare) as info:
            m.det()
        assert info.value.shape == (2, 3)
        with pytest.raises(NotSquare):
            m.det_mod(7)

    def test_rank(self):
        """Test exact and screened ranks."""
        singular = ExactMatrix.from_rows([[1, 2], [2, 4]])
        screened = ExactMatrix.from_rows([[1, 0], [0, 7]])

        assert rank_exact(singular) == 1
        assert singular.rank(modulus=7) == 1
        assert screened.rank_mod(7) == 1
        assert screened.rank(modulus=7) == 2
        assert kernel_dim(ExactMatrix.zeros(2, 3)) == 3
        assert ExactMatrix.zeros(0, 4).rank() == 0

    def test_screened_singularity(self):
        """Test that a zero determinant modulo p is confirmed exactly."""
        m = ExactMatrix.from_rows([[7, 0], [0, 1]])

        assert not m.is_singular(modulus=7)
        assert ExactMatrix.from_rows([[1, 2], [2, 4]]).is_singular(modulus=7)

    def test_inverse(self):
        """Test the exact inverse and the error on singular input."""
        m = ExactMatrix.from_rows([[2, 1], [1, 1]])

        assert m.inverse() == ExactMatrix.from_rows([[1, -1], [-1, 2]])
        assert m @ m.inverse() == ExactMatrix.identity(2)
        with pytest.raises(SingularBlock):
            ExactMatrix.from_rows([[1, 2], [2, 4]]).inverse()

    def test_block_diagonal(self):
        """Test that the block diagonal determinant is the product."""
        a = ExactMatrix.from_rows([[1, 2], [3, 4]])
        b = ExactMatrix.diagonal([3])

        assert a.block_diagonal(b).shape == (3, 3)
        assert a.block_diagonal(b).det() == -6

    @settings(max_examples=30, deadline=None)
    @given(
        st.integers(1, 4),
        st.integers(1, 4),
        st.integers(1, 4),
        st.data(),
    )
    def test_product(self, n, k, m, data):
        """Test the product against the entrywise sum over the inner index."""
        entries = st.fractions(-9, 9, max_denominator=5)
        left = [[data.draw(entries) for _ in range(k)] for _ in range(n)]
        right = [[data.draw(entries) for _ in range(m)] for _ in range(k)]
        expected = [
            [sum(left[i][t] * right[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)
        ]

        product = ExactMatrix.from_rows(left) @ ExactMatrix.from_rows(right)
        assert product == ExactMatrix.from_rows(expected)

    def test_empty_product(self):
        """Test products with an empty inner or outer dimension."""
        assert ExactMatrix.zeros(2, 0) @ ExactMatrix.zeros(0, 3) == ExactMatrix.zeros(2, 3)
        assert ExactMatrix.zeros(0, 2) @ ExactMatrix.zeros(2, 3) == ExactMatrix.zeros(0, 3)

    def test_invalid(self):
        """Test malformed constructions."""
        with pytest.raises(ValueError):
            ExactMatrix(2, 2, (1, 2, 3))
        with pytest.raises(ValueError):
            ExactMatrix.from_rows([[1, 2], [3]])
        with pytest.raises(ValueError):
            ExactMatrix.identity(2) @ ExactMatrix.identity(3)


class TestRepresentation:
    """Test representations and the group action."""

    def test_from_arrow_maps(self, k2):
        """Test building a representation from arrow ids."""
        v = kronecker(k2, 2, 3)

        assert v.map_of("b") == ExactMatrix.from_rows([[3]])
        with pytest.raises(KeyError):
            v.map_of("z")

    def test_shape_mismatch(self, k2):
        """Test that a map of the wrong shape is rejected."""
        with pytest.raises(QuiverMismatch):
            Representation.from_arrow_maps(
                k2, k2.dimension_vector(1, 2), {"a": [[1]], "b": [[1]]}
            )

    def test_direct_sum(self, k2, a2):
        """Test that direct sums add dimensions and refuse other quivers."""
        v = kronecker(k2, 2, 3).direct_sum(Representation.zero(k2, k2.dimension_vector(1, 0)))

        assert v.dim == k2.dimension_vector(2, 1)
        assert v.map_of("a").shape == (1, 2)
        with pytest.raises(QuiverMismatch):
            v.direct_sum(Representation.zero(a2, a2.dimension_vector(1, 0, 0)))

    def test_group_element(self, k2):
        """Test invertibility checks, inverses and characters."""
        dim = k2.dimension_vector(1, 1)
        g = GroupElement.scalars(k2, dim, [2, 3])

        assert character_value(g, k2.weight(1, -1)) == Fraction(2, 3)
        assert character_value(g.inverse(), k2.weight(1, -1)) == Fraction(3, 2)
        assert act(GroupElement.identity(k2, dim), kronecker(k2, 2, 3)) == kronecker(k2, 2, 3)
        with pytest.raises(SingularBlock):
            GroupElement.scalars(k2, dim, [0, 1])
        with pytest.raises(QuiverMismatch):
            character_value(g, IntVector.of(1, -1, 0))

    def test_act_mismatch(self, k2):
        """Test that an element of another GL(d) cannot act."""
        g = GroupElement.identity(k2, k2.dimension_vector(2, 1))

        with pytest.raises(QuiverMismatch):
            act(g, kronecker(k2, 1, 1))


class TestSchofield:
    """Test d_V^W, the Schofield determinant and Hom/Ext dimensions."""

    def test_kronecker_value(self, k2):
        """Test c(V, W) = phi delta - psi gamma on the Kronecker quiver."""
        v, w = kronecker(k2, 2, 3), kronecker(k2, 5, 7)

        assert build_dvw(v, w).shape == (2, 2)
        assert schofield_value(v, w) == -1
        assert schofield_value_lower(w, v) == -1
        assert schofield_value_mod(v, w, 101) == 100
        assert not schofield_vanishes(v, w, modulus=101)

    def test_vanishes_on_isomorphic(self, k2):
        """Test that c(V, V) vanishes since Hom(V, V) is nonzero."""
        v = kronecker(k2, 2, 3)

        assert schofield_vanishes(v, v)
        assert hom_dim(v, v) == 1
        assert ext_dim(v, v) == 1

    def test_simples(self, k2):
        """Test Hom and Ext between the simple representations."""
        s1 = Representation.zero(k2, k2.dimension_vector(1, 0))
        s2 = Representation.zero(k2, k2.dimension_vector(0, 1))

        assert ext_dim(s1, s2) == 2
        assert hom_dim(s1, s2) == 0
        assert hom_dim(s1, s1) == 1

    def test_not_orthogonal(self, k2):
        """Test that non-orthogonal dimensions have no determinant."""
        s1 = Representation.zero(k2, k2.dimension_vector(1, 0))

        with pytest.raises(NotOrthogonal):
            schofield_value(s1, kronecker(k2, 1, 1))

    def test_quiver_mismatch(self, k2, a2):
        """Test that d_V^W needs a common quiver."""
        with pytest.raises(QuiverMismatch):
            build_dvw(kronecker(k2, 1, 1), Representation.zero(a2, a2.dimension_vector(1, 1, 1)))

    def test_upper_semi_invariance(self, k2):
        """Test c^V(g^-1 W) = chi(g) c^V(W) with the weight <dim V, ->."""
        v, w = kronecker(k2, 2, 3), kronecker(k2, 5, 7)
        g = GroupElement.scalars(k2, w.dim, [2, 3])
        chi = character_value(g, weight_of_left_form(k2, v.dim))

        assert chi == Fraction(2, 3)
        assert schofield_value(v, act(g.inverse(), w)) == chi * schofield_value(v, w)

    def test_lower_semi_invariance(self, k2):
        """Test c_W(g^-1 V) = chi(g) c_W(V) with the weight -<-, dim W>."""
        v, w = kronecker(k2, 2, 3), kronecker(k2, 5, 7)
        g = GroupElement.scalars(k2, v.dim, [2, 3])
        chi = character_value(g, weight_of_right_form(k2, w.dim))

        assert schofield_value_lower(w, act(g.inverse(), v)) == chi * schofield_value_lower(w, v)

    @settings(max_examples=20, deadline=None)
    @given(st.tuples(*[st.integers(-9, 9)] * 4))
    def test_kronecker_closed_form(self, k2, entries):
        """Test c(V, W) = phi delta - psi gamma on random Kronecker pairs."""
        phi, psi, gamma, delta = entries
        v, w = kronecker(k2, phi, psi), kronecker(k2, gamma, delta)

        assert schofield_value(v, w) == phi * delta - psi * gamma
        assert schofield_value_lower(w, v) == phi * delta - psi * gamma

    @pytest.mark.parametrize("index", range(20))
    @pytest.mark.parametrize("name", ["k2_es", "d4_es"])
    def test_random_group_elements(self, request, name, index):
        """Test both semi-invariance laws for random diagonal group elements."""
        es = request.getfixturevalue(name)
        q = es.quiver
        v = sample_representation(q, es.h, CFG, "invariance/V", index)
        w = sample_representation(q, es.h, CFG, "invariance/W", index)
        g = sample_group_element(q, es.h, CFG, "invariance/g", index)
        upper = character_value(g, weight_of_left_form(q, v.dim))
        lower = character_value(g, weight_of_right_form(q, w.dim))

        assert schofield_value(v, act(g.inverse(), w)) == upper * schofield_value(v, w)
        assert schofield_value_lower(w, act(g.inverse(), v)) == lower * schofield_value_lower(w, v)


class TestSchofieldProperties:
    """Test vanishing, multiplicativity and the Euler form on seeded samples."""

    QUIVERS = ["k2_es", "a2_es", "d4_es"]

    @staticmethod
    def orthogonal_dims(es, i):
        """Cycle through (h, h), (h, 2h) and (2h, h)."""
        h, twice = es.h, (2 * es.h).as_dimension_vector()
        return [(h, h), (h, twice), (twice, h)][i % 3]

    @pytest.mark.parametrize("name", QUIVERS)
    def test_vanishing_iff_hom(self, request, name):
        """Test c(V, W) = 0 iff Hom(V, W) != 0 on 50 orthogonal pairs."""
        es = request.getfixturevalue(name)
        for i in range(50):
            a, b = self.orthogonal_dims(es, i)
            v = sample_representation(es.quiver, a, CFG, "pairs/V", i, bound=1)
            w = sample_representation(es.quiver, b, CFG, "pairs/W", i, bound=1)

            assert schofield_vanishes(v, w) == (hom_dim(v, w) > 0)
            assert schofield_vanishes(v, v)

    @pytest.mark.parametrize("name", QUIVERS)
    def test_direct_sums(self, request, name):
        """Test c^V(W1 + W2) = c^V(W1) c^V(W2), up to the sign of the basis order."""
        es = request.getfixturevalue(name)
        q = es.quiver
        for i in range(50):
            v = sample_representation(q, es.h, CFG, "sums/V", i, bound=2)
            w1 = sample_representation(q, es.h, CFG, "sums/W1", i, bound=2)
            w2 = sample_representation(q, es.h, CFG, "sums/W2", i, bound=2)
            product = schofield_value(v, w1) * schofield_value(v, w2)

            assert schofield_value(v, w1.direct_sum(w2)) in {product, -product}

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_euler_form(self, k2_es, a2_es, d4_es, data):
        """Test dim Hom - dim Ext = <dim V, dim W> on random pairs."""
        es = data.draw(st.sampled_from([k2_es, a2_es, d4_es]))
        q = es.quiver
        dims = st.lists(st.integers(0, 2), min_size=q.n, max_size=q.n)
        a = DimensionVector.of(*data.draw(dims))
        b = DimensionVector.of(*data.draw(dims))
        index = data.draw(st.integers(0, 10**6))
        v = sample_representation(q, a, CFG, "euler/V", index, bound=3)
        w = sample_representation(q, b, CFG, "euler/W", index, bound=3)

        assert hom_dim(v, w) - ext_dim(v, w) == euler_form(q, a, b)
