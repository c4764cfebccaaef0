"""The K4 that is terminal-equivalent to L_n on ``{p_n, q_n, p_0, q_0}``.

Edge classes: ``w`` on both rungs (``p_n q_n``, ``p_0 q_0``), ``u`` on the
rails (``p_n p_0``, ``q_n q_0``) and ``t`` on the diagonals (``p_n q_0``,
``q_n p_0``).  Pairing opposite edges gives ``w||t = A_n``, ``u||w = B_n`` and
``u||t = C_n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..network import Edge, ResistorNetwork
from ..quadfield import QuadNum
from .sequences import seq_A, seq_B, seq_C

__all__ = ["K4Equivalent", "k4_equivalent", "K4_NAMES"]

K4_NAMES = ("p_n", "q_n", "p_0", "q_0")


def _parallel(r1: QuadNum | None, r2: QuadNum | None) -> QuadNum:
    if r1 is None:
        return r2
    if r2 is None:
        return r1
    return r1 * r2 / (r1 + r2)


@dataclass(frozen=True)
class K4Equivalent:
    """Branch resistances; a branch is ``None`` when it is an open circuit."""

    n: int
    w: QuadNum | None
    u: QuadNum | None
    t: QuadNum | None

    @property
    def A(self) -> QuadNum:
        return _parallel(self.w, self.t)

    @property
    def B(self) -> QuadNum:
        return _parallel(self.u, self.w)

    @property
    def C(self) -> QuadNum:
        return _parallel(self.u, self.t)

    def network(self) -> ResistorNetwork:
        """Four vertices ordered ``(p_n, q_n, p_0, q_0)``; open branches omitted."""
        layout = [(0, 1, self.w), (2, 3, self.w), (0, 2, self.u), (1, 3, self.u), (0, 3, self.t), (1, 2, self.t)]
        edges = tuple(Edge(a, b, r) for a, b, r in layout if r is not None)
        return ResistorNetwork(4, edges, K4_NAMES)


def k4_equivalent(n: int) -> K4Equivalent:
    """Solve ``1/w + 1/t = 1/A_n``, ``1/u + 1/w = 1/B_n``, ``1/u + 1/t = 1/C_n``.

    For n = 1 (the bare hexagon) the diagonal conductance is exactly zero and
    ``t`` is reported as ``None``.
    """
    if n < 1:
        raise ValueError("k4_equivalent needs n >= 1")
    ga, gb, gc = 1 / seq_A(n), 1 / seq_B(n), 1 / seq_C(n)
    conductances = ((ga + gb - gc) / 2, (gb + gc - ga) / 2, (ga + gc - gb) / 2)
    w, u, t = (None if not g else 1 / g for g in conductances)
    for name, g in zip("wut", conductances):
        if g.sign() < 0:
            raise ArithmeticError(f"negative branch conductance {name} for n={n}")
    return K4Equivalent(n, w, u, t)
