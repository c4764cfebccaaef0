"""Closed forms of the chain sequences.

With ``alpha = 3 - 2*sqrt2``:

* ``z_n = r(p_n, q_n)``, ``x_n = r(p_n, p_0)``, ``y_n = r(p_n, q_0)`` in L_n,
  and ``t_n = x_n - y_n``;
* ``a_k, b_k, c_k``: resistances from ``u_k`` to ``p_0``, ``q_0``, ``v_k`` in
  L_k with pendant edges ``p_k u_k``, ``q_k v_k`` attached;
* ``A_n, B_n, C_n``: the pairwise sums ``z+y-x``, ``z-y+x``, ``-z+y+x``, i.e.
  the parallel pairs of the K4 that is equivalent to L_n.
"""

from __future__ import annotations

from functools import lru_cache

from ..quadfield import ONE, SQRT2, QuadNum, alpha_pow

__all__ = [
    "seq_z",
    "seq_t",
    "seq_x",
    "seq_y",
    "seq_a",
    "seq_b",
    "seq_c",
    "seq_A",
    "seq_B",
    "seq_C",
]

_TWO_R2 = 2 * SQRT2
_FOUR_R2 = 4 * SQRT2


def _check(n: int) -> None:
    if n < 0:
        raise ValueError(f"sequence index must be >= 0, got {n}")


@lru_cache(maxsize=None)
def seq_z(n: int) -> QuadNum:
    _check(n)
    return -(2 + _TWO_R2) + _FOUR_R2 / (ONE - alpha_pow(2 * n + 2))


@lru_cache(maxsize=None)
def seq_t(n: int) -> QuadNum:
    _check(n)
    return -_FOUR_R2 * alpha_pow(n + 1) / (ONE - alpha_pow(2 * n + 2))


@lru_cache(maxsize=None)
def seq_x(n: int) -> QuadNum:
    _check(n)
    return _TWO_R2 / (ONE + alpha_pow(n + 1)) - 1 - SQRT2 + n


@lru_cache(maxsize=None)
def seq_y(n: int) -> QuadNum:
    _check(n)
    return _TWO_R2 / (ONE - alpha_pow(n + 1)) - 1 - SQRT2 + n


def seq_a(k: int) -> QuadNum:
    return 1 + seq_x(k)


def seq_b(k: int) -> QuadNum:
    return 1 + seq_y(k)


def seq_c(k: int) -> QuadNum:
    return 2 + seq_z(k)


@lru_cache(maxsize=None)
def seq_A(n: int) -> QuadNum:
    _check(n)
    return -2 - _TWO_R2 + _FOUR_R2 / (ONE - alpha_pow(n + 1))


@lru_cache(maxsize=None)
def seq_B(n: int) -> QuadNum:
    _check(n)
    return -2 - _TWO_R2 + _FOUR_R2 / (ONE + alpha_pow(n + 1))


def seq_C(n: int) -> QuadNum:
    _check(n)
    return QuadNum(2 * n)
