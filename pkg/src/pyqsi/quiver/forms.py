"""Euler form, Tits quadratic form and weights of a quiver.

All values are Python integers, so nothing wraps around. Parallel arrows are
counted with multiplicity.

Functions:
    euler_form: The bilinear Euler form <a, b>.
    quadratic_form: The Tits form q(a) = <a, a>.
    weight_of_left_form: Coordinates of the functional <a, ->.
    weight_of_right_form: Coordinates of the functional -<-, b>.
    apply_weight: Pairing sum_x s(x) g(x).

**Authors**: SDU
"""

# ⚛️ Type checking
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pyqsi.quiver.quiver import Quiver
    from pyqsi.quiver.vectors import IntVector

# ✅ Local imports
from pyqsi.exceptions.quiver_error import IndexMismatch
from pyqsi.quiver.vectors import Weight


def euler_form(q: Quiver, a: IntVector, b: IntVector) -> int:
    """Evaluate <a, b> = sum_x a(x) b(x) - sum_arrows a(ta) b(ha).

    Args:
        q: The quiver.
        a: Left argument, indexed by the vertices of `q`.
        b: Right argument, indexed by the vertices of `q`.

    Raises:
        IndexMismatch: If a vector does not have one entry per vertex.
    """
    q.check(a)
    q.check(b)
    return a.dot(b) - sum(a[arrow.tail] * b[arrow.head] for arrow in q.arrows)


def quadratic_form(q: Quiver, a: IntVector) -> int:
    """Evaluate q(a) = sum_x a(x)^2 - sum_arrows a(ta) a(ha)."""
    return euler_form(q, a, a)


def weight_of_left_form(q: Quiver, a: IntVector) -> Weight:
    """Return the weight s with apply_weight(s, b) = <a, b> for every b.

    Coordinates are s(x) = a(x) - sum over arrows with head x of a(tail).
    This is the weight of the Schofield semi-invariant c^V with dim V = a.
    """
    q.check(a)
    entries = list(a)
    for arrow in q.arrows:
        entries[arrow.head] -= a[arrow.tail]
    return Weight(tuple(entries))


def weight_of_right_form(q: Quiver, b: IntVector) -> Weight:
    """Return the weight s with apply_weight(s, a) = -<a, b> for every a.

    Coordinates are s(x) = -b(x) + sum over arrows with tail x of b(head).
    This is the weight of the Schofield semi-invariant c_W with dim W = b.
    """
    q.check(b)
    entries = [-x for x in b]
    for arrow in q.arrows:
        entries[arrow.tail] += b[arrow.head]
    return Weight(tuple(entries))


def apply_weight(s: IntVector, g: IntVector) -> int:
    """Pair a weight with a dimension vector: sum_x s(x) g(x).

    Raises:
        IndexMismatch: If the vectors have different lengths.
    """
    if len(s) != len(g):
        raise IndexMismatch(expected=len(s), got=len(g))
    return s.dot(g)
