"""Schofield semi-invariants.

For representations V of dimension a and W of dimension b the canonical map

    d_V^W : (phi(x))_x  ->  (W(a) phi(ta) - phi(ha) V(a))_a

goes from sum_x Hom(V(x), W(x)) to sum_a Hom(V(ta), W(ha)). Its kernel is
Hom(V, W), its cokernel Ext(V, W), and when <a, b> = 0 it is square with
determinant c(V, W). Fixing V gives the semi-invariant c^V of weight <a, ->,
fixing W gives c_W of weight -<-, b>.

The domain basis runs over the vertices in order, each block phi(x) row-major;
the codomain runs over the arrows in order, each block row-major. The sign of
c(V, W) depends on this order.

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from fractions import Fraction

    from pyqsi.schofield.representation import Representation

# ✅ Standard library imports
import logging

# ✅ Local imports
from pyqsi.exceptions.linear_algebra_error import NotOrthogonal, QuiverMismatch
from pyqsi.quiver.forms import euler_form
from pyqsi.schofield.exact_matrix import ExactMatrix

logger = logging.getLogger(__name__)


def build_dvw(v: Representation, w: Representation) -> ExactMatrix:
    """Matrix of d_V^W.

    Columns are the entries phi(x)[r][c] (r < b(x), c < a(x)); rows are the entries
    (r, c) of the arrow blocks, r < b(ha), c < a(ta). There are sum_x a(x) b(x)
    columns and sum_arrows a(ta) b(ha) rows, so cols - rows = <a, b>.

    Raises:
        QuiverMismatch: If `v` and `w` live on different quivers.
    """
    if v.quiver != w.quiver:
        raise QuiverMismatch("d_V^W needs two representations of the same quiver")
    q, alpha, beta = v.quiver, v.dim, w.dim

    offsets = []
    cols = 0
    for x in range(q.n):
        offsets.append(cols)
        cols += alpha[x] * beta[x]

    def column(x: int, r: int, c: int) -> int:
        return offsets[x] + r * alpha[x] + c

    rows = []
    for arrow, v_map, w_map in zip(q.arrows, v.maps, w.maps, strict=True):
        t, h = arrow.tail, arrow.head
        for r in range(beta[h]):
            for c in range(alpha[t]):
                row = [0] * cols
                for k in range(beta[t]):
                    row[column(t, k, c)] += w_map[r, k]
                for k in range(alpha[h]):
                    row[column(h, r, k)] -= v_map[k, c]
                rows.append(row)
    return ExactMatrix.from_rows(rows, cols=cols)


def _square_dvw(v: Representation, w: Representation) -> ExactMatrix:
    if v.quiver != w.quiver:
        raise QuiverMismatch("c(V, W) needs two representations of the same quiver")
    pairing = euler_form(v.quiver, v.dim, w.dim)
    if pairing != 0:
        raise NotOrthogonal(f"<{v.dim}, {w.dim}> = {pairing}, d_V^W is not square")
    return build_dvw(v, w)


def schofield_value(v: Representation, w: Representation) -> Fraction:
    """Evaluate c(V, W) = det d_V^W.

    Args:
        v: Left representation, dimension a.
        w: Right representation, dimension b.

    Raises:
        NotOrthogonal: If <a, b> != 0.
        QuiverMismatch: If the quivers differ.
    """
    return _square_dvw(v, w).det()


def schofield_value_lower(w: Representation, v: Representation) -> Fraction:
    """Evaluate c_W(V) = c(V, W), the semi-invariant of weight -<-, dim W>."""
    return schofield_value(v, w)


def schofield_value_mod(v: Representation, w: Representation, modulus: int) -> int:
    """c(V, W) modulo a prime, for integer representations.

    Raises:
        NotOrthogonal: If <dim V, dim W> != 0.
    """
    return _square_dvw(v, w).det_mod(modulus)


def schofield_vanishes(
    v: Representation, w: Representation, modulus: int | None = None
) -> bool:
    """Whether c(V, W) = 0, screened modulo `modulus` when given.

    Raises:
        NotOrthogonal: If <dim V, dim W> != 0.
    """
    return _square_dvw(v, w).is_singular(modulus=modulus)


def hom_dim(v: Representation, w: Representation, modulus: int | None = None) -> int:
    """dim Hom(V, W), the kernel dimension of d_V^W."""
    return build_dvw(v, w).kernel_dim(modulus=modulus)


def ext_dim(v: Representation, w: Representation, modulus: int | None = None) -> int:
    """dim Ext(V, W), the cokernel dimension of d_V^W."""
    matrix = build_dvw(v, w)
    return matrix.rows - matrix.rank(modulus=modulus)
