"""Series, parallel and delta-wye reduction of resistor networks with traces.

A :class:`Circuit` is the mutable-by-copy working form of a network: vertex and
edge ids are stable and never reused, so every step of a
:class:`ReductionTrace` names exactly what it consumed and produced and a trace
can be replayed on the initial circuit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from .network import Edge, ResistorNetwork, as_resistance, format_resistance, is_connected
from .oracle import DisconnectedNetworkError
from .quadfield import QuadNum

__all__ = [
    "Circuit",
    "ReductionError",
    "ReductionStep",
    "ReductionTrace",
    "apply_series",
    "apply_parallel",
    "apply_delta_y",
    "apply_prune",
    "reduce_to_terminals",
    "two_terminal_resistance",
    "replay",
    "parse_steps",
]

Resistance = Union[Fraction, QuadNum]

PRUNE, SERIES, PARALLEL, DELTA_Y = "prune", "series", "parallel", "delta-y"


class ReductionError(ValueError):
    """A transformation was applied where its pattern does not exist."""


@dataclass(frozen=True)
class WireEdge:
    id: int
    u: int
    v: int
    r: Resistance

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u

    def to_json(self) -> dict:
        return {"id": self.id, "u": self.u, "v": self.v, "r": format_resistance(self.r)}

    @classmethod
    def from_json(cls, obj: dict) -> WireEdge:
        return cls(int(obj["id"]), int(obj["u"]), int(obj["v"]), as_resistance(obj["r"]))


def _wire(eid: int, u: int, v: int, r) -> WireEdge:
    if u > v:
        u, v = v, u
    return WireEdge(eid, u, v, as_resistance(r))


@dataclass(frozen=True)
class Circuit:
    vertices: tuple[int, ...]
    edges: tuple[WireEdge, ...]
    names: tuple[str, ...]
    next_edge: int

    @classmethod
    def from_network(cls, net: ResistorNetwork | Circuit) -> Circuit:
        if isinstance(net, Circuit):
            return net
        edges = tuple(_wire(k, e.u, e.v, e.resistance) for k, e in enumerate(net.edges))
        return cls(tuple(range(net.vertex_count)), edges, net.vertex_names, len(edges))

    @property
    def next_vertex(self) -> int:
        return len(self.names)

    def edge(self, eid: int) -> WireEdge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise ReductionError(f"no edge with id {eid}")

    def incident(self, v: int) -> list[WireEdge]:
        return [e for e in self.edges if v in (e.u, e.v)]

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def between(self, a: int, b: int) -> list[WireEdge]:
        lo, hi = min(a, b), max(a, b)
        return [e for e in self.edges if e.u == lo and e.v == hi]

    def _check_vertex(self, v: int) -> None:
        if v not in self.vertices:
            raise ReductionError(f"vertex {v} is not in the circuit")

    def _rebuild(self, drop_vertices=(), drop_edges=(), add_vertices=(), add_edges=()) -> Circuit:
        dropped = set(drop_edges)
        edges = tuple(e for e in self.edges if e.id not in dropped) + tuple(add_edges)
        verts = tuple(sorted(set(self.vertices) - set(drop_vertices) | set(add_vertices)))
        names = self.names + tuple(f"*{v}" for v in add_vertices)
        return Circuit(verts, edges, names, self.next_edge + len(add_edges))

    def to_network(self) -> ResistorNetwork:
        """Compact ResistorNetwork over the live vertices, names preserved."""
        index = {v: k for k, v in enumerate(self.vertices)}
        edges = tuple(Edge(index[e.u], index[e.v], e.r) for e in self.edges)
        return ResistorNetwork(len(self.vertices), edges, tuple(self.names[v] for v in self.vertices))


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    consumed_vertices: tuple[int, ...]
    consumed_edges: tuple[WireEdge, ...]
    produced_vertices: tuple[int, ...] = ()
    produced_edges: tuple[WireEdge, ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "consumed": {
                "vertices": list(self.consumed_vertices),
                "edges": [e.to_json() for e in self.consumed_edges],
            },
            "produced": {
                "vertices": list(self.produced_vertices),
                "edges": [e.to_json() for e in self.produced_edges],
            },
        }

    @classmethod
    def from_json(cls, obj: dict) -> ReductionStep:
        c, p = obj["consumed"], obj["produced"]
        return cls(
            obj["kind"],
            tuple(c["vertices"]),
            tuple(WireEdge.from_json(e) for e in c["edges"]),
            tuple(p["vertices"]),
            tuple(WireEdge.from_json(e) for e in p["edges"]),
        )


# -- single transformations -------------------------------------------------


def _step_prune(c: Circuit, v: int, terminals=()) -> tuple[Circuit, ReductionStep]:
    c._check_vertex(v)
    if v in terminals:
        raise ReductionError(f"vertex {v} is a terminal")
    inc = c.incident(v)
    if len(inc) != 1:
        raise ReductionError(f"prune needs a degree-1 vertex; {v} has degree {len(inc)}")
    step = ReductionStep(PRUNE, (v,), tuple(inc))
    return c._rebuild(drop_vertices=(v,), drop_edges=(inc[0].id,)), step


def _step_series(c: Circuit, v: int, terminals=()) -> tuple[Circuit, ReductionStep]:
    c._check_vertex(v)
    if v in terminals:
        raise ReductionError(f"series middle vertex {v} is a terminal")
    inc = c.incident(v)
    if len(inc) != 2:
        raise ReductionError(f"series needs a degree-2 vertex; {v} has degree {len(inc)}")
    e1, e2 = inc
    a, b = e1.other(v), e2.other(v)
    if a == b:
        raise ReductionError(f"both edges at {v} lead to {a}; merge them in parallel first")
    new = _wire(c.next_edge, a, b, e1.r + e2.r)
    step = ReductionStep(SERIES, (v,), (e1, e2), (), (new,))
    return c._rebuild(drop_vertices=(v,), drop_edges=(e1.id, e2.id), add_edges=(new,)), step


def _step_parallel(c: Circuit, pair: Sequence[int]) -> tuple[Circuit, ReductionStep]:
    if len(pair) != 2 or pair[0] == pair[1]:
        raise ReductionError("parallel needs two distinct edge ids")
    e1, e2 = sorted((c.edge(pair[0]), c.edge(pair[1])), key=lambda e: e.id)
    if (e1.u, e1.v) != (e2.u, e2.v):
        raise ReductionError(f"edges {e1.id} and {e2.id} do not share both endpoints")
    new = _wire(c.next_edge, e1.u, e1.v, e1.r * e2.r / (e1.r + e2.r))
    step = ReductionStep(PARALLEL, (e1.u, e1.v), (e1, e2), (), (new,))
    return c._rebuild(drop_edges=(e1.id, e2.id), add_edges=(new,)), step


def _step_delta_y(c: Circuit, triangle: Sequence[int]) -> tuple[Circuit, ReductionStep]:
    tri = tuple(sorted(set(triangle)))
    if len(tri) != 3:
        raise ReductionError("delta-y needs three distinct vertices")
    for v in tri:
        c._check_vertex(v)
    sides = {}
    for x, y in combinations(tri, 2):
        found = c.between(x, y)
        if len(found) != 1:
            raise ReductionError(f"delta-y needs exactly one edge between {x} and {y}, found {len(found)}")
        sides[x, y] = found[0]
    a, b, cc = tri
    rab, rac, rbc = sides[a, b].r, sides[a, cc].r, sides[b, cc].r
    total = rab + rac + rbc
    s = c.next_vertex
    star = (
        _wire(c.next_edge, a, s, rab * rac / total),
        _wire(c.next_edge + 1, b, s, rab * rbc / total),
        _wire(c.next_edge + 2, cc, s, rac * rbc / total),
    )
    consumed = tuple(sides[k] for k in ((a, b), (a, cc), (b, cc)))
    step = ReductionStep(DELTA_Y, tri, consumed, (s,), star)
    out = c._rebuild(drop_edges=[e.id for e in consumed], add_vertices=(s,), add_edges=star)
    return out, step


def apply_prune(net, vertex: int, terminals: Iterable[int] = ()) -> Circuit:
    """Delete a degree-1 non-terminal together with its edge."""
    return _step_prune(Circuit.from_network(net), vertex, frozenset(terminals))[0]


def apply_series(net, middle_vertex: int, terminals: Iterable[int] = ()) -> Circuit:
    return _step_series(Circuit.from_network(net), middle_vertex, frozenset(terminals))[0]


def apply_parallel(net, edge_pair: Sequence[int]) -> Circuit:
    """Merge two edges with the same endpoints; ``edge_pair`` holds edge ids."""
    return _step_parallel(Circuit.from_network(net), edge_pair)[0]


def apply_delta_y(net, triangle: Sequence[int]) -> Circuit:
    """Replace a triangle by a star through a fresh vertex."""
    return _step_delta_y(Circuit.from_network(net), triangle)[0]


# -- greedy loop --------------------------------------------------------------


def _star_center(c: Circuit, terminals: tuple[int, ...]) -> int | None:
    """The hub of a final Y on three terminals, if that is what is left."""
    rest = [v for v in c.vertices if v not in terminals]
    if len(terminals) != 3 or len(rest) != 1 or len(c.edges) != 3:
        return None
    hub = rest[0]
    if sorted(e.other(hub) for e in c.incident(hub)) != sorted(terminals):
        return None
    return hub


def _pair_resistances(c: Circuit, terminals: tuple[int, ...]) -> dict[tuple[int, int], Resistance]:
    hub = _star_center(c, terminals)
    if hub is not None:
        arm = {e.other(hub): e.r for e in c.incident(hub)}
        return {(a, b): as_resistance(arm[a] + arm[b]) for a, b in combinations(terminals, 2)}
    g = {}
    for x, y in combinations(terminals, 2):
        found = c.between(x, y)
        g[x, y] = g[y, x] = (1 / found[0].r) if found else Fraction(0)
    out = {}
    if len(terminals) == 2:
        a, b = terminals
        out[a, b] = as_resistance(1 / g[a, b])
        return out
    for a, b in combinations(terminals, 2):
        (cc,) = set(terminals) - {a, b}
        side = g[a, cc] + g[b, cc]
        if not side:
            r = 1 / g[a, b]
        else:
            r = side / (g[a, b] * side + g[a, cc] * g[b, cc])
        out[a, b] = as_resistance(r)
    return out


@dataclass(frozen=True)
class ReductionTrace:
    initial: Circuit
    terminals: tuple[int, ...]
    steps: tuple[ReductionStep, ...]
    final: Circuit
    stuck: bool = False
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def status(self) -> str:
        return "stuck" if self.stuck else "complete"

    def resistances(self) -> dict[tuple[int, int], Resistance]:
        """Exact resistance for each terminal pair; empty when stuck."""
        if self.stuck:
            return {}
        if "r" not in self._cache:
            self._cache["r"] = _pair_resistances(self.final, self.terminals)
        return dict(self._cache["r"])

    @property
    def resistance(self) -> Resistance | None:
        """The single terminal-pair resistance of a two-terminal run."""
        if self.stuck or len(self.terminals) != 2:
            return None
        return next(iter(self.resistances().values()))

    def step_lines(self) -> list[str]:
        return [json.dumps(s.to_json()) for s in self.steps]

    def to_jsonl(self) -> str:
        return "".join(line + "\n" for line in self.step_lines())


def _next_move(c: Circuit, terminals: frozenset[int], allow_delta_y: bool):
    adj: dict[int, list[WireEdge]] = {v: [] for v in c.vertices}
    groups: dict[tuple[int, int], list[WireEdge]] = {}
    for e in c.edges:
        adj[e.u].append(e)
        adj[e.v].append(e)
        groups.setdefault((e.u, e.v), []).append(e)
    inner = [v for v in c.vertices if v not in terminals]
    for v in inner:
        if len(adj[v]) == 1:
            return PRUNE, v
    for v in inner:
        if len(adj[v]) == 2 and adj[v][0].other(v) != adj[v][1].other(v):
            return SERIES, v
    for key in sorted(groups):
        if len(groups[key]) > 1:
            first, second = sorted(e.id for e in groups[key])[:2]
            return PARALLEL, (first, second)
    if not allow_delta_y:
        return None
    nbrs = {v: {e.other(v) for e in adj[v]} for v in c.vertices}
    for v in sorted(inner, key=lambda w: (len(adj[w]), w)):
        for x, y in combinations(sorted(nbrs[v]), 2):
            if y in nbrs[x]:
                return DELTA_Y, (v, x, y)
    return None


def _resolve(net: ResistorNetwork | Circuit, t) -> int:
    if isinstance(t, str):
        names = net.names if isinstance(net, Circuit) else net.vertex_names
        try:
            return names.index(t)
        except ValueError:
            raise ReductionError(f"no vertex named {t!r}") from None
    return int(t)


def reduce_to_terminals(
    net: ResistorNetwork | Circuit,
    terminals: Iterable[int | str],
    max_delta_y: int | None = None,
) -> ReductionTrace:
    """Greedily reduce ``net`` until only the 2 or 3 terminals remain.

    Three terminals may also end as a Y whose hub is the one leftover vertex.

    Moves are tried in the order prune, series, parallel, delta-y, each on the
    lowest-index candidate.  Delta-y picks a triangle through a non-terminal of
    minimum degree.  If no move applies, or more than ``max_delta_y`` delta-y
    moves were needed, the trace is returned with ``stuck=True``.
    """
    start = Circuit.from_network(net)
    terms = tuple(_resolve(start, t) for t in terminals)
    if len(set(terms)) != len(terms):
        raise ReductionError("terminals must be distinct")
    if len(terms) not in (2, 3):
        raise ReductionError(f"need 2 or 3 terminals, got {len(terms)}")
    for t in terms:
        start._check_vertex(t)
    if not is_connected(start.to_network()):
        raise DisconnectedNetworkError("network is not connected")
    if max_delta_y is None:
        max_delta_y = 4 * (len(start.vertices) + len(start.edges))
    tset = frozenset(terms)
    c, steps, dy_count = start, [], 0
    while True:
        move = _next_move(c, tset, dy_count < max_delta_y)
        if move is None:
            break
        kind, arg = move
        if kind == PRUNE:
            c, step = _step_prune(c, arg, tset)
        elif kind == SERIES:
            c, step = _step_series(c, arg, tset)
        elif kind == PARALLEL:
            c, step = _step_parallel(c, arg)
        else:
            c, step = _step_delta_y(c, arg)
            dy_count += 1
        steps.append(step)
    terms = tuple(sorted(terms))
    stuck = any(v not in tset for v in c.vertices) and _star_center(c, terms) is None
    return ReductionTrace(start, terms, tuple(steps), c, stuck)


def two_terminal_resistance(net: ResistorNetwork | Circuit, p: int | str, q: int | str, **kw) -> Resistance | None:
    """Exact resistance between ``p`` and ``q`` by reduction, or None if stuck."""
    return reduce_to_terminals(net, (p, q), **kw).resistance


# -- replay -------------------------------------------------------------------


def parse_steps(lines: Iterable[str]) -> list[ReductionStep]:
    return [ReductionStep.from_json(json.loads(line)) for line in lines if line.strip()]


def replay(initial: ResistorNetwork | Circuit, steps: Iterable[ReductionStep | str]) -> Circuit:
    """Re-apply recorded steps, checking each one produces what was recorded."""
    c = Circuit.from_network(initial)
    for k, step in enumerate(steps):
        if isinstance(step, str):
            step = ReductionStep.from_json(json.loads(step))
        if step.kind == PRUNE:
            c, got = _step_prune(c, step.consumed_vertices[0])
        elif step.kind == SERIES:
            c, got = _step_series(c, step.consumed_vertices[0])
        elif step.kind == PARALLEL:
            c, got = _step_parallel(c, [e.id for e in step.consumed_edges])
        elif step.kind == DELTA_Y:
            c, got = _step_delta_y(c, step.consumed_vertices)
        else:
            raise ReductionError(f"step {k}: unknown kind {step.kind!r}")
        if got != step:
            raise ReductionError(f"step {k} ({step.kind}) does not reproduce the recorded result")
    return c

