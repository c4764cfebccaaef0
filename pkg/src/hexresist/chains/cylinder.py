"""Closed-form resistance between any two vertices of the cylinder R_n.

Every pair is rotated so that its first vertex sits at index 1; six formulas
``r(p_1, p_i)``, ``r(p_1, q_i)``, ``r(u_1, u_i)``, ``r(u_1, v_i)``,
``r(p_1, u_i)``, ``r(p_1, v_i)`` for ``1 <= i <= n`` then cover everything.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..quadfield import ONE, SQRT2, ZERO, QuadNum, alpha_pow as al
from .labels import VertexLabel, cylinder

__all__ = [
    "resistance_cylinder",
    "rc_pp",
    "rc_pq",
    "rc_uu",
    "rc_uv",
    "rc_pu",
    "rc_pv",
]


def _core(n: int, i: int, sgn: int) -> QuadNum:
    return 1 + al(n) + sgn * (al(n - i + 1) + al(i - 1))


def _arc(n: int, i: int) -> Fraction:
    return Fraction((n - i + 1) * (i - 1), n)


def rc_pp(n: int, i: int) -> QuadNum:
    return _core(n, i, -1) / (2 * SQRT2 * (ONE - al(n))) + _arc(n, i)


def rc_pq(n: int, i: int) -> QuadNum:
    return _core(n, i, +1) / (2 * SQRT2 * (ONE - al(n))) + _arc(n, i)


def rc_uu(n: int, i: int) -> QuadNum:
    return _core(n, i, -1) / (SQRT2 * (ONE - al(n))) + _arc(n, i)


def rc_uv(n: int, i: int) -> QuadNum:
    return _core(n, i, +1) / (SQRT2 * (ONE - al(n))) + _arc(n, i)


_K1 = QuadNum(20, 14)
_K2 = QuadNum(20, -14)
_K3 = QuadNum(5, 2)
_K0 = QuadNum(11, 2)


def _pu_pv(n: int, i: int, sgn: int) -> QuadNum:
    num = _K0 + sgn * (_K1 * al(i + 1) + _K2 * al(n - i - 1)) - _K3 * al(n)
    return num / (4 * SQRT2 * (ONE - al(n))) - Fraction((2 * i - 1) ** 2, 4 * n) + (i - 1) - SQRT2


def rc_pu(n: int, i: int) -> QuadNum:
    return _pu_pv(n, i, -1)


def rc_pv(n: int, i: int) -> QuadNum:
    return _pu_pv(n, i, +1)


_VERTICAL = {"p": "q", "q": "p", "u": "v", "v": "u"}
_CLASSES = {
    ("p", "p"): rc_pp,
    ("p", "q"): rc_pq,
    ("u", "u"): rc_uu,
    ("u", "v"): rc_uv,
    ("p", "u"): rc_pu,
    ("p", "v"): rc_pv,
}


@lru_cache(maxsize=1 << 16)
def _dispatch(n: int, a: VertexLabel, b: VertexLabel) -> QuadNum:
    if a == b:
        return ZERO
    if a.family in "uv" and b.family in "pq":
        a, b = b, a
    fa, fb = a.family, b.family
    if fa in "qv":
        fa, fb = _VERTICAL[fa], _VERTICAL[fb]
    i = (b.index - a.index) % n + 1
    return _CLASSES[fa, fb](n, i)


def resistance_cylinder(n: int, a: VertexLabel, b: VertexLabel) -> QuadNum:
    """Exact effective resistance between labels ``a`` and ``b`` of R_n."""
    kind = cylinder(n)
    return _dispatch(n, kind.normalize(a), kind.normalize(b))
