"""Resistor networks and their weighted Laplacians.

A :class:`ResistorNetwork` is an undirected multigraph on vertices
``0 .. vertex_count-1`` whose edges carry exact positive resistances (ints,
:class:`fractions.Fraction` or :class:`~hexresist.quadfield.QuadNum`).
Resistances are stored as given; conductances only appear inside
:func:`build_laplacian`.

Network file format (one directive per line, ``#`` starts a comment)::

    vertices 3
    name 0 a
    edge 0 1 1
    edge 1 2 3/2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .quadfield import QuadNum, parse_quad

Resistance = Union[Fraction, QuadNum]

__all__ = [
    "Edge",
    "ResistorNetwork",
    "NetworkError",
    "build_laplacian",
    "is_connected",
    "as_resistance",
    "format_resistance",
    "parse_network",
    "read_network",
    "format_network",
]


class NetworkError(ValueError):
    """Invalid network construction or file content."""


def as_resistance(value) -> Resistance:
    """Normalize to an exact resistance: ints and rationals become Fractions."""
    if isinstance(value, QuadNum):
        return value.as_fraction() if value.is_rational else value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return as_resistance(parse_quad(value))
    raise NetworkError(f"resistance must be exact (int, Fraction or QuadNum), got {type(value).__name__}")


def format_resistance(value) -> str:
    """Exact textual form shared with :mod:`hexresist.quadfield`."""
    return QuadNum.coerce(value).to_text()


def _positive(r: Resistance) -> bool:
    if isinstance(r, QuadNum):
        return r.sign() > 0
    return r > 0


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    resistance: Resistance

    @property
    def conductance(self) -> Resistance:
        return 1 / self.resistance


@dataclass(frozen=True)
class ResistorNetwork:
    vertex_count: int
    edges: tuple[Edge, ...] = ()
    vertex_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise NetworkError("vertex_count must be non-negative")
        names = tuple(self.vertex_names) or tuple(str(i) for i in range(n))
        if len(names) != n:
            raise NetworkError(f"expected {n} vertex names, got {len(names)}")
        edges = []
        for e in self.edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            u, v = int(e.u), int(e.v)
            if not (0 <= u < n and 0 <= v < n):
                raise NetworkError(f"edge endpoint out of range: ({u}, {v}) with {n} vertices")
            if u == v:
                raise NetworkError(f"self-loop at vertex {u}")
            r = as_resistance(e.resistance)
            if not _positive(r):
                raise NetworkError(f"resistance must be positive, got {format_resistance(r)} on ({u}, {v})")
            edges.append(Edge(u, v, r))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "vertex_names", names)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable, names: Iterable[str] = ()) -> ResistorNetwork:
        return cls(vertex_count, tuple(Edge(*e) if not isinstance(e, Edge) else e for e in edges), tuple(names))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def index(self, name: str) -> int:
        try:
            return self.vertex_names.index(name)
        except ValueError:
            raise KeyError(f"no vertex named {name!r}") from None

    def degree(self, v: int) -> int:
        return sum((e.u == v) + (e.v == v) for e in self.edges)

    def disjoint_union(self, other: ResistorNetwork) -> ResistorNetwork:
        shift = self.vertex_count
        moved = [Edge(e.u + shift, e.v + shift, e.resistance) for e in other.edges]
        return ResistorNetwork(
            self.vertex_count + other.vertex_count,
            self.edges + tuple(moved),
            self.vertex_names + other.vertex_names,
        )


def build_laplacian(net: ResistorNetwork, exact: bool = False) -> np.ndarray:
    """Conductance-weighted Laplacian; parallel edges accumulate.

    With ``exact=True`` the result is an object array of exact entries
    (Fractions, or QuadNums when any resistance is irrational).
    """
    n = net.vertex_count
    if exact:
        lap = np.empty((n, n), dtype=object)
        lap[...] = Fraction(0)
        for e in net.edges:
            g = e.conductance
            lap[e.u, e.u] += g
            lap[e.v, e.v] += g
            lap[e.u, e.v] -= g
            lap[e.v, e.u] -= g
        return lap
    lap = np.zeros((n, n))
    if not net.edges:
        return lap
    u = np.fromiter((e.u for e in net.edges), dtype=np.intp, count=net.edge_count)
    v = np.fromiter((e.v for e in net.edges), dtype=np.intp, count=net.edge_count)
    g = np.fromiter((float(e.conductance) for e in net.edges), dtype=float, count=net.edge_count)
    np.add.at(lap, (u, u), g)
    np.add.at(lap, (v, v), g)
    np.add.at(lap, (u, v), -g)
    np.add.at(lap, (v, u), -g)
    return lap


def is_connected(net: ResistorNetwork) -> bool:
    """Connectivity by traversal; the empty graph counts as connected."""
    n = net.vertex_count
    if n <= 1:
        return True
    rows = [e.u for e in net.edges]
    cols = [e.v for e in net.edges]
    adj = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    ncomp, _ = connected_components(adj, directed=False)
    return ncomp == 1


# -- text format -----------------------------------------------------------


def parse_network(text: str) -> ResistorNetwork:
    count = None
    names: dict[int, str] = {}
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split(None, 1)
        rest = rest[0] if rest else ""
        try:
            if head == "vertices":
                count = int(rest)
            elif head == "name":
                idx, label = rest.split(None, 1)
                names[int(idx)] = label.strip()
            elif head == "edge":
                u, v, r = rest.split(None, 2)
                edges.append(Edge(int(u), int(v), as_resistance(r)))
            else:
                raise NetworkError(f"unknown directive {head!r}")
        except (ValueError, ZeroDivisionError) as exc:
            raise NetworkError(f"line {lineno}: {exc}") from None
    if count is None:
        raise NetworkError("missing 'vertices <count>' header")
    bad = [i for i in names if not 0 <= i < count]
    if bad:
        raise NetworkError(f"name index out of range: {bad[0]}")
    label_list = tuple(names.get(i, str(i)) for i in range(count))
    return ResistorNetwork(count, tuple(edges), label_list)


def read_network(path) -> ResistorNetwork:
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh.read())


def format_network(net: ResistorNetwork) -> str:
    lines = [f"vertices {net.vertex_count}"]
    for i, name in enumerate(net.vertex_names):
        if name != str(i):
            lines.append(f"name {i} {name}")
    for e in net.edges:
        r = e.resistance
        text = f"{r.numerator}/{r.denominator}" if isinstance(r, Fraction) else r.to_text()
        lines.append(f"edge {e.u} {e.v} {text}")
    return "\n".join(lines) + "\n"
