"""Closed-form resistance between any two vertices of L_n.

The pair-class formulas below hold for the index orderings noted on each one.
:func:`resistance_linear` maps an arbitrary pair onto a covered case with the
two chain symmetries (swap top/bottom; flip left/right) before evaluating.
"""

from __future__ import annotations

from functools import lru_cache

from ..quadfield import ONE, SQRT2, ZERO, QuadNum, alpha_pow as al
from .labels import VertexLabel, linear

__all__ = [
    "resistance_linear",
    "r_pp",
    "r_qp",
    "r_rung",
    "r_uv_same",
    "r_up",
    "r_vp",
    "r_uu",
    "r_vu",
    "r_pn_p",
    "r_pn_q",
    "r_pn_u",
    "r_pn_v",
]

_R2_4 = 4 * SQRT2


def _den(n: int) -> QuadNum:
    return ONE - al(2 * n + 2)


def r_pp(n: int, i: int, j: int) -> QuadNum:
    """r(p_i, p_j), 0 <= j <= i <= n."""
    d = i - j
    inner = 2 - al(i + j + 1) + al(2 * j + 1) + al(2 * n - 2 * i + 1) * (1 - al(d) - 2 * al(i + j + 1))
    return d + (1 - al(d)) * inner / (_R2_4 * _den(n))


def r_qp(n: int, i: int, j: int) -> QuadNum:
    """r(q_i, p_j), 0 <= j <= i <= n."""
    d = i - j
    inner = 2 + al(i + j + 1) + al(2 * j + 1) + al(2 * n - 2 * i + 1) * (1 + al(d) + 2 * al(i + j + 1))
    return d + (1 + al(d)) * inner / (_R2_4 * _den(n))


def r_rung(n: int, i: int) -> QuadNum:
    """r(p_i, q_i)."""
    return (1 + al(2 * n - 2 * i + 1)) * (1 + al(2 * i + 1)) / (SQRT2 * _den(n))


def r_uv_same(n: int, i: int) -> QuadNum:
    """r(u_i, v_i), 0 <= i <= n-1."""
    return SQRT2 * (1 + al(2 * i + 2)) * (1 + al(2 * n - 2 * i)) / _den(n)


def _fg(n: int, i: int, j: int, sgn: int) -> QuadNum:
    cross = al(-i - j) * (ONE + al(1)) * (1 + al(2 * j + 1)) * (al(2 * i) + al(2 * n))
    return (
        2 * al(2 * i + 2)
        + al(2 * n - 2 * j + 1)
        + 2 * al(2 * n - 2 * i)
        + al(2 * n + 3)
        + sgn * cross
        + al(-1)
        + al(2 * j + 1)
    )


def r_up(n: int, i: int, j: int) -> QuadNum:
    """r(u_i, p_j), 0 <= j <= i <= n-1."""
    return (i - j) + _fg(n, i, j, -1) / (_R2_4 * _den(n))


def r_vp(n: int, i: int, j: int) -> QuadNum:
    """r(v_i, p_j), 0 <= j <= i <= n-1."""
    return (i - j) + _fg(n, i, j, +1) / (_R2_4 * _den(n))


def r_uu(n: int, i: int, j: int) -> QuadNum:
    """r(u_i, u_j), 0 <= j <= i <= n-1."""
    lead = al(i + 1) - al(j + 1)
    rest = (
        al(i + 1) - al(j + 1) - 2 * al(-j - 1)
        + al(2 * n - i - 2 * j - 1) - al(2 * n - j - 2 * i - 1)
        + 2 * al(2 * n - i + 1)
    )
    return (i - j) + lead * rest / (2 * SQRT2 * _den(n))


def r_vu(n: int, i: int, j: int) -> QuadNum:
    """r(v_i, u_j), 0 <= j <= i <= n-1."""
    lead = al(i + 1) + al(j + 1)
    rest = (
        al(i + 1) + al(j + 1) + 2 * al(-j - 1)
        + al(2 * n - i - 2 * j - 1) + al(2 * n - j - 2 * i - 1)
        + 2 * al(2 * n - i + 1)
    )
    return (i - j) + lead * rest / (2 * SQRT2 * _den(n))


# Right-end special cases; used to cross-check the general classes.


def r_pn_p(n: int, i: int) -> QuadNum:
    """r(p_n, p_i), 0 <= i <= n."""
    num = (1 - al(n - i)) * (2 - 2 * al(n + i + 2) - al(n + i + 1) - al(n - i + 1) + al(2 * i + 1) + al(1))
    return (n - i) + num / (_R2_4 * _den(n))


def r_pn_q(n: int, i: int) -> QuadNum:
    """r(p_n, q_i), 0 <= i <= n."""
    num = (1 + al(n - i)) * (2 + 2 * al(n + i + 2) + al(n + i + 1) + al(n - i + 1) + al(2 * i + 1) + al(1))
    return (n - i) + num / (_R2_4 * _den(n))


def r_pn_u(n: int, i: int) -> QuadNum:
    """r(p_n, u_i), 0 <= i <= n-1."""
    num = SQRT2 * (1 - al(n - i)) * (3 + al(2 * i + 2) - al(n - i) - 3 * al(n + i + 2))
    return num / (4 * _den(n)) + (n - i - 1)


def r_pn_v(n: int, i: int) -> QuadNum:
    """r(p_n, v_i), 0 <= i <= n-1."""
    num = SQRT2 * (1 + al(n - i)) * (3 + al(2 * i + 2) + al(n - i) + 3 * al(n + i + 2))
    return num / (4 * _den(n)) + (n - i - 1)


_VERTICAL = {"p": "q", "q": "p", "u": "v", "v": "u"}


@lru_cache(maxsize=1 << 16)
def _dispatch(n: int, a: VertexLabel, b: VertexLabel) -> QuadNum:
    if a == b:
        return ZERO
    # rung families first
    if a.family in "uv" and b.family in "pq":
        a, b = b, a
    fa, ia, fb, ib = a.family, a.index, b.family, b.index
    if fa in "pq" and fb in "pq":
        if fa == fb:
            return r_pp(n, max(ia, ib), min(ia, ib))
        if ia == ib:
            return r_rung(n, ia)
        # r(p_i, q_j) == r(q_i, p_j) by the vertical mirror
        return r_qp(n, max(ia, ib), min(ia, ib))
    if fa in "uv" and fb in "uv":
        if fa == fb:
            return r_uu(n, max(ia, ib), min(ia, ib))
        if ia == ib:
            return r_uv_same(n, ia)
        return r_vu(n, max(ia, ib), min(ia, ib))
    # a is p/q, b is u/v; reduce to a = p_j with the vertical mirror
    if fa == "q":
        fb = _VERTICAL[fb]
    j, i = ia, ib
    if j > i:
        # flip left/right: p_j -> p_{n-j}, u_i -> u_{n-1-i}
        j, i = n - j, n - 1 - i
    return r_up(n, i, j) if fb == "u" else r_vp(n, i, j)


def resistance_linear(n: int, a: VertexLabel, b: VertexLabel) -> QuadNum:
    """Exact effective resistance between labels ``a`` and ``b`` of L_n."""
    kind = linear(n)
    a = kind.normalize(a)
    b = kind.normalize(b)
    return _dispatch(n, a, b)
