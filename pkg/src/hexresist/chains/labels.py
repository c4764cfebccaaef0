"""Vertex labels, chain kinds and the L_n / R_n generators.

Hexagon ``i`` (1-based) of either chain is the 6-cycle
``p_{i-1} u_{i-1} p_i q_i v_{i-1} q_{i-1}``: ``p``/``q`` are the two ends of a
rung, ``u`` sits on the top rail between ``p_i`` and ``p_{i+1}`` and ``v`` on
the bottom rail between ``q_i`` and ``q_{i+1}``.  The cylinder identifies
index 0 with index n, so its labels run over ``1..n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterator

from ..network import Edge, ResistorNetwork

__all__ = [
    "FAMILIES",
    "VertexLabel",
    "ChainKind",
    "LabelError",
    "linear",
    "cylinder",
    "build_chain",
    "build_extended_linear",
    "automorphisms",
    "label_pairs",
]

FAMILIES = "pquv"
_LABEL_RE = re.compile(r"^\s*([pquvPQUV])\s*[:_]\s*(-?\d+)\s*$")


class LabelError(ValueError):
    """Label outside the vertex set of the chain."""


@dataclass(frozen=True, order=True)
class VertexLabel:
    family: str
    index: int

    def __post_init__(self):
        fam = self.family.lower()
        if fam not in FAMILIES:
            raise LabelError(f"unknown family {self.family!r}; expected one of p, q, u, v")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "index", int(self.index))

    @classmethod
    def parse(cls, text: str) -> VertexLabel:
        """Accepts ``p:3`` (CLI syntax) and ``p_3`` (network names)."""
        m = _LABEL_RE.match(text)
        if m is None:
            raise LabelError(f"bad vertex label {text!r}; expected family:index such as p:0 or v:3")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}_{self.index}"

    @property
    def cli(self) -> str:
        return f"{self.family}:{self.index}"


def _lab(family: str, index: int) -> VertexLabel:
    return VertexLabel(family, index)


@dataclass(frozen=True)
class ChainKind:
    kind: str
    n: int

    def __post_init__(self):
        kind = self.kind.lower()
        if kind not in ("linear", "cylinder"):
            raise ValueError(f"chain kind must be 'linear' or 'cylinder', got {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if kind == "linear" and self.n < 0:
            raise ValueError("linear chain needs n >= 0")
        if kind == "cylinder" and self.n < 3:
            raise ValueError("cylinder chain needs n >= 3 (R_1, R_2 are multigraphs)")

    @property
    def is_linear(self) -> bool:
        return self.kind == "linear"

    @property
    def order(self) -> int:
        return 4 * self.n + 2 if self.is_linear else 4 * self.n

    @property
    def size(self) -> int:
        return 5 * self.n + 1 if self.is_linear else 5 * self.n

    def index_range(self, family: str) -> range:
        n = self.n
        if not self.is_linear:
            return range(1, n + 1)
        return range(0, n + 1) if family in "pq" else range(0, n)

    @cached_property
    def labels(self) -> tuple[VertexLabel, ...]:
        return tuple(_lab(f, i) for f in FAMILIES for i in self.index_range(f))

    @cached_property
    def position(self) -> dict[VertexLabel, int]:
        return {lab: k for k, lab in enumerate(self.labels)}

    def normalize(self, label: VertexLabel) -> VertexLabel:
        """Validate ``label``; on the cylinder index 0 is an alias for n."""
        if not self.is_linear and label.index == 0:
            label = _lab(label.family, self.n)
        if label.index not in self.index_range(label.family):
            r = self.index_range(label.family)
            raise LabelError(
                f"{label.cli} is not a vertex of {self}; {label.family} indices run over {r.start}..{r.stop - 1}"
            )
        return label

    def __str__(self) -> str:
        return f"{'L' if self.is_linear else 'R'}_{self.n}"


def linear(n: int) -> ChainKind:
    return ChainKind("linear", n)


def cylinder(n: int) -> ChainKind:
    return ChainKind("cylinder", n)


def _chain_edges(kind: ChainKind) -> list[tuple[VertexLabel, VertexLabel]]:
    n = kind.n
    if kind.is_linear:
        nxt = lambda i: i + 1  # noqa: E731
        hexes = range(0, n)
    else:
        nxt = lambda i: i % n + 1  # noqa: E731
        hexes = range(1, n + 1)
    pairs = [(_lab("p", i), _lab("q", i)) for i in kind.index_range("p")]
    for i in hexes:
        pairs += [
            (_lab("p", i), _lab("u", i)),
            (_lab("u", i), _lab("p", nxt(i))),
            (_lab("q", i), _lab("v", i)),
            (_lab("v", i), _lab("q", nxt(i))),
        ]
    return pairs


def build_chain(kind: ChainKind) -> ResistorNetwork:
    """Unit-resistance network of L_n or R_n, vertices named ``p_0``, ``u_3``, ..."""
    pos = kind.position
    edges = tuple(Edge(pos[a], pos[b], 1) for a, b in _chain_edges(kind))
    net = ResistorNetwork(len(kind.labels), edges, tuple(str(lab) for lab in kind.labels))
    assert net.vertex_count == kind.order and net.edge_count == kind.size
    return net


def build_extended_linear(k: int) -> ResistorNetwork:
    """L_k with the two pendant edges ``p_k u_k`` and ``q_k v_k`` attached."""
    base = linear(k)
    labels = base.labels + (_lab("u", k), _lab("v", k))
    pos = {lab: i for i, lab in enumerate(labels)}
    pairs = _chain_edges(base) + [(_lab("p", k), _lab("u", k)), (_lab("q", k), _lab("v", k))]
    edges = tuple(Edge(pos[a], pos[b], 1) for a, b in pairs)
    return ResistorNetwork(len(labels), edges, tuple(str(lab) for lab in labels))


_MIRROR = {"p": "q", "q": "p", "u": "v", "v": "u"}


def automorphisms(kind: ChainKind) -> list[Callable[[VertexLabel], VertexLabel]]:
    """The label symmetries generated by the vertical mirror and the chain's
    horizontal symmetries (left-right flip, plus rotations on the cylinder)."""
    n = kind.n

    def vertical(lab: VertexLabel) -> VertexLabel:
        return _lab(_MIRROR[lab.family], lab.index)

    if kind.is_linear:

        def flip(lab: VertexLabel) -> VertexLabel:
            top = n if lab.family in "pq" else n - 1
            return _lab(lab.family, top - lab.index)

        horizontal = [lambda lab: lab, flip]
    else:

        def wrap(i: int) -> int:
            return (i - 1) % n + 1

        def rot(s):
            return lambda lab: _lab(lab.family, wrap(lab.index + s))

        def refl(s):
            # p_i -> p_{-i}, u_i -> u_{-i-1}, then rotate by s
            def f(lab: VertexLabel) -> VertexLabel:
                j = -lab.index if lab.family in "pq" else -lab.index - 1
                return _lab(lab.family, wrap(j + s))

            return f

        horizontal = [rot(s) for s in range(n)] + [refl(s) for s in range(n)]
    maps = []
    for h in horizontal:
        maps.append(h)
        maps.append(lambda lab, h=h: h(vertical(lab)))
    return maps


def label_pairs(kind: ChainKind) -> Iterator[tuple[VertexLabel, VertexLabel]]:
    """All unordered vertex pairs in lexicographic label order."""
    return combinations(kind.labels, 2)
