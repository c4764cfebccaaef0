"""Whole-chain quantities: Kirchhoff indices, extremal pairs, limits."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..quadfield import ONE, SQRT2, QuadNum, alpha_pow as al
from .cylinder import resistance_cylinder
from .labels import ChainKind, VertexLabel, label_pairs
from .linear import resistance_linear

__all__ = [
    "resistance",
    "kirchhoff_linear",
    "kirchhoff_cylinder",
    "kirchhoff_pair_sum",
    "Extremal",
    "extremal_pairs",
    "Limit",
    "asymptotic_limits",
]


def resistance(kind: ChainKind, a: VertexLabel, b: VertexLabel) -> QuadNum:
    if kind.is_linear:
        return resistance_linear(kind.n, a, b)
    return resistance_cylinder(kind.n, a, b)


def kirchhoff_linear(n: int) -> QuadNum:
    if n < 1:
        raise ValueError("kirchhoff_linear needs n >= 1")
    big = al(2 * n + 2)
    head = 21 - 6 * SQRT2 + 2 * (8 + 9 * SQRT2) * n - big * (21 + 6 * SQRT2 + 2 * (8 - 9 * SQRT2) * n)
    return (1 + 2 * n) * head / (12 * (ONE - big)) + Fraction(4 * (1 + 2 * n) * n * n, 3)


def kirchhoff_cylinder(n: int) -> QuadNum:
    if n < 3:
        raise ValueError("kirchhoff_cylinder needs n >= 3")
    return Fraction(4 * n**3 - n, 3) + 3 * SQRT2 * n * n * (ONE + al(n)) / (ONE - al(n))


def kirchhoff_pair_sum(kind: ChainKind) -> QuadNum:
    """Kirchhoff index as the exact sum of closed-form pair resistances."""
    total = QuadNum(0)
    for a, b in label_pairs(kind):
        total = total + resistance(kind, a, b)
    return total


@dataclass(frozen=True)
class Extremal:
    kind: ChainKind
    max_pair: tuple[VertexLabel, VertexLabel]
    max_value: QuadNum
    min_pair: tuple[VertexLabel, VertexLabel]
    min_value: QuadNum


def extremal_pairs(kind: ChainKind) -> Extremal:
    """Farthest and closest vertex pairs of L_n (n >= 1) or R_n (n >= 3)."""
    n = kind.n
    if kind.is_linear:
        if n < 1:
            raise ValueError("extremal pairs need n >= 1")
        hi = (VertexLabel("p", 0), VertexLabel("q", n))
        lo = (VertexLabel("p", n // 2), VertexLabel("q", n // 2))
    else:
        hi = (VertexLabel("u", 1), VertexLabel("v", (n + 2) // 2))
        lo = (VertexLabel("p", 1), VertexLabel("q", 1))
    return Extremal(kind, hi, resistance(kind, *hi), lo, resistance(kind, *lo))


@dataclass(frozen=True)
class Limit:
    """A limit as n grows; ``at(n)`` is the exact finite-n quantity."""

    name: str
    value: QuadNum
    expression: str
    at: Callable[[int], QuadNum] = field(repr=False, compare=False)


def _p(i):
    return VertexLabel("p", i)


def _q(i):
    return VertexLabel("q", i)


def _linear_limits() -> list[Limit]:
    rl = resistance_linear
    half_r2 = SQRT2 / 2
    return [
        Limit("min-rung", half_r2, "r(p[n//2], q[n//2])", lambda n: rl(n, _p(n // 2), _q(n // 2))),
        Limit(
            "adjacent-top",
            2 - half_r2,
            "r(p[(n-1)//2 + 1], p[(n-1)//2])",
            lambda n: rl(n, _p((n - 1) // 2 + 1), _p((n - 1) // 2)),
        ),
        Limit("end-slope-pp", QuadNum(1), "r(p[n], p[0]) / n", lambda n: rl(n, _p(n), _p(0)) / n),
        Limit("end-slope-qp", QuadNum(1), "r(q[n], p[0]) / n", lambda n: rl(n, _q(n), _p(0)) / n),
        Limit(
            "end-increment-pp",
            QuadNum(1),
            "r_{L[n+1]}(p[n+1], p[0]) - r_{L[n]}(p[n], p[0])",
            lambda n: rl(n + 1, _p(n + 1), _p(0)) - rl(n, _p(n), _p(0)),
        ),
        Limit(
            "end-increment-qp",
            QuadNum(1),
            "r_{L[n+1]}(q[n+1], p[0]) - r_{L[n]}(q[n], p[0])",
            lambda n: rl(n + 1, _q(n + 1), _p(0)) - rl(n, _q(n), _p(0)),
        ),
    ]


def _cylinder_limits() -> list[Limit]:
    rc = resistance_cylinder
    half_r2 = SQRT2 / 2
    quarter = QuadNum(Fraction(1, 4))
    far = lambda n: (n + 2) // 2  # noqa: E731
    return [
        Limit("min-rung", half_r2, "r(p[1], q[1])", lambda n: rc(n, _p(1), _q(1))),
        Limit("adjacent-top", 2 - half_r2, "r(p[1], p[2])", lambda n: rc(n, _p(1), _p(2))),
        Limit("far-slope-pp", quarter, "r(p[1], p[(n+2)//2]) / n", lambda n: rc(n, _p(1), _p(far(n))) / n),
        Limit("far-slope-pq", quarter, "r(p[1], q[(n+2)//2]) / n", lambda n: rc(n, _p(1), _q(far(n))) / n),
        Limit(
            "far-increment-pp",
            quarter,
            "r_{R[n+1]}(p[1], p[(n+3)//2]) - r_{R[n]}(p[1], p[(n+2)//2])",
            lambda n: rc(n + 1, _p(1), _p(far(n + 1))) - rc(n, _p(1), _p(far(n))),
        ),
        Limit(
            "far-increment-pq",
            quarter,
            "r_{R[n+1]}(p[1], q[(n+3)//2]) - r_{R[n]}(p[1], q[(n+2)//2])",
            lambda n: rc(n + 1, _p(1), _q(far(n + 1))) - rc(n, _p(1), _q(far(n))),
        ),
        Limit(
            "kf-ratio",
            QuadNum(Fraction(1, 2)),
            "Kf(R[n]) / Kf(L[n])",
            lambda n: kirchhoff_cylinder(n) / kirchhoff_linear(n),
        ),
    ]


def asymptotic_limits(kind: ChainKind | str) -> list[Limit]:
    """Named limits for the chain family; ``kind`` may be a ChainKind or its name."""
    name = kind.kind if isinstance(kind, ChainKind) else str(kind).lower()
    if name == "linear":
        return _linear_limits()
    if name == "cylinder":
        return _cylinder_limits()
    raise ValueError(f"unknown chain family {kind!r}")
