"""Acceptance criteria; each test records one PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) to print the lines
without pytest.
"""

from __future__ import annotations

import time
from fractions import Fraction

import networkx as nx
import numpy as np

from hexresist.chains import (
    VertexLabel,
    automorphisms,
    build_chain,
    cylinder,
    k4_equivalent,
    kirchhoff_cylinder,
    kirchhoff_linear,
    kirchhoff_pair_sum,
    label_pairs,
    linear,
    resistance,
    resistance_cylinder,
    resistance_linear,
    seq_t,
    seq_x,
    seq_y,
    seq_z,
)
from hexresist.network import Edge, ResistorNetwork, build_laplacian
from hexresist.oracle import effective_resistance, pseudo_inverse, resistance_matrix
from hexresist.quadfield import SQRT2, QuadNum
from hexresist.reduction import reduce_to_terminals, replay

ACCEPTANCE_LINES: list[str] = []
SEED = 20240611
CASES = 1000


def verdict(num: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{num}] {'PASS' if ok else 'FAIL'} {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def P(i):
    return VertexLabel("p", i)


def Q(i):
    return VertexLabel("q", i)


def U(i):
    return VertexLabel("u", i)


def V(i):
    return VertexLabel("v", i)


def _kinds():
    return [linear(n) for n in range(1, 9)] + [cylinder(n) for n in range(3, 9)]


# -- 1 ---------------------------------------------------------------------


def test_criterion_1_formula_matches_oracle():
    worst, pairs = 0.0, 0
    for kind in _kinds():
        mat = resistance_matrix(build_chain(kind))
        for a, b in label_pairs(kind):
            got = float(resistance(kind, a, b))
            worst = max(worst, abs(got - mat[kind.position[a], kind.position[b]]))
            pairs += 1
    verdict(1, "closed forms vs pseudoinverse oracle, L_1..L_8 and R_3..R_8", worst <= 1e-9,
            f"{pairs} pairs, max |delta| {worst:.2e}")


# -- 2 ---------------------------------------------------------------------


def test_criterion_2_kirchhoff():
    ok = kirchhoff_linear(1) == Fraction(35, 2)
    notes = [f"Kf(L_1) = {kirchhoff_linear(1).to_decimal(6)}"]
    worst_rel = 0.0
    for kind in _kinds():
        kf = kirchhoff_linear(kind.n) if kind.is_linear else kirchhoff_cylinder(kind.n)
        mat = resistance_matrix(build_chain(kind))
        oracle_sum = float(np.triu(mat, 1).sum())
        worst_rel = max(worst_rel, abs(float(kf) - oracle_sum) / oracle_sum)
        if kf != kirchhoff_pair_sum(kind):
            ok = False
            notes.append(f"exact pair-sum mismatch on {kind}")
    ok = ok and worst_rel <= 1e-7
    notes.append(f"max rel delta vs oracle {worst_rel:.2e}")
    verdict(2, "Kirchhoff closed forms (exact pair-sum, oracle)", ok, "; ".join(notes))


# -- 3 ---------------------------------------------------------------------


def _single_edge(trace):
    final = trace.final
    if trace.stuck or len(final.vertices) != 2 or len(final.edges) != 1:
        return None
    return final.edges[0].r


def test_criterion_3_reduction():
    bad = []
    for n in range(0, 13):
        net = build_chain(linear(n))
        if _single_edge(reduce_to_terminals(net, (f"p_{n}", f"q_{n}"))) != seq_z(n):
            bad.append(f"z_{n}")
        if n <= 10 and _single_edge(reduce_to_terminals(net, ("p_0", f"q_{n}"))) != seq_y(n):
            bad.append(f"y_{n}")
    verdict(3, "reduction gives z_n (n<=12) and y_n (n<=10) exactly", not bad, ", ".join(bad) or "all exact")


# -- 4 ---------------------------------------------------------------------


def _pair_orbit(net: ResistorNetwork, a: int, b: int) -> set[frozenset[int]]:
    g = nx.Graph()
    g.add_nodes_from(range(net.vertex_count))
    g.add_edges_from((e.u, e.v) for e in net.edges)
    maps = nx.algorithms.isomorphism.GraphMatcher(g, g).isomorphisms_iter()
    return {frozenset((m[a], m[b])) for m in maps}


def _arg_sets(mat: np.ndarray, tol: float = 1e-9):
    iu = np.triu_indices(mat.shape[0], 1)
    vals = mat[iu]
    hi, lo = vals.max(), vals.min()
    top = {frozenset((int(i), int(j))) for i, j, v in zip(*iu, vals) if v >= hi - tol}
    bottom = {frozenset((int(i), int(j))) for i, j, v in zip(*iu, vals) if v <= lo + tol}
    return top, bottom


def test_criterion_4_extremal_pairs():
    bad = []
    cases = [(linear(n), (P(0), Q(n)), (P(n // 2), Q(n // 2))) for n in range(1, 11)]
    cases += [(cylinder(n), (U(1), V((n + 2) // 2)), (P(1), Q(1))) for n in range(3, 11)]
    for kind, hi_pair, lo_pair in cases:
        net = build_chain(kind)
        pos = kind.position
        top, bottom = _arg_sets(resistance_matrix(net))
        if top != _pair_orbit(net, pos[hi_pair[0]], pos[hi_pair[1]]):
            bad.append(f"max {kind}")
        if bottom != _pair_orbit(net, pos[lo_pair[0]], pos[lo_pair[1]]):
            bad.append(f"min {kind}")
    verdict(4, "extremal argmax/argmin sets equal automorphism orbits", not bad, ", ".join(bad) or "18 chains")


# -- 5 ---------------------------------------------------------------------

# (first family, second family, smallest k) for r(a_j, b_{j+k}) on L_n
LINEAR_CHAINS = {
    "pp": ("p", "p", 1),
    "qp": ("q", "p", 0),
    "uu": ("u", "u", 1),
    "vu": ("v", "u", 0),
    "pu": ("p", "u", 0),
    "pv": ("p", "v", 0),
}
# (first family, second family, first i, offset) for r(a_1, b_i) on R_n; the peak sits at (n + offset) / 2
CYLINDER_CHAINS = {
    "pp": ("p", "p", 2, 2),
    "pq": ("p", "q", 1, 2),
    "uu": ("u", "u", 2, 2),
    "uv": ("u", "v", 1, 2),
    "pu": ("p", "u", 1, 1),
    "pv": ("p", "v", 1, 1),
}


def _top(n, fam):
    return n if fam in "pq" else n - 1


def _signs(f):
    return [(f[t + 1] - f[t]).sign() for t in range(len(f) - 1)]


def _linear_chain_failures(n: int) -> list[str]:
    out = []
    for name, (fa, fb, kmin) in LINEAR_CHAINS.items():
        for k in range(kmin, _top(n, fb) + 1):
            last = min(_top(n, fb) - k, _top(n, fa))
            f = [resistance_linear(n, VertexLabel(fa, j), VertexLabel(fb, j + k)) for j in range(last + 1)]
            if name in ("pu", "pv"):
                # the step j -> j+1 turns at n = 2j + k + 2; it is flat there only for pu with k = 0
                want = []
                for j in range(last):
                    m = 2 * j + k + 2
                    if n > m or (n == m and (k > 0 or name == "pv")):
                        want.append(-1)
                    else:
                        want.append(0 if n == m else 1)
            else:
                # symmetric valley centred at last/2
                lo, hi = last // 2, (last + 1) // 2
                want = [-1 if j < lo else 0 if j < hi else 1 for j in range(last)]
            if _signs(f) != want:
                out.append(f"(i) {name} n={n} k={k}")
        for j in range(_top(n, fa) + 1):
            g = [resistance_linear(n, VertexLabel(fa, j), VertexLabel(fb, j + k))
                 for k in range(kmin, _top(n, fb) - j + 1)]
            if any(s <= 0 for s in _signs(g)):
                out.append(f"(ii) {name} n={n} j={j}")
        shift = 1 if name in ("pu", "pv") else 0
        g = []
        for k in range(kmin, _top(n, fb) + 1):
            m = (n - k - shift) // 2
            if 0 <= m <= _top(n, fa) and m + k <= _top(n, fb):
                g.append(resistance_linear(n, VertexLabel(fa, m), VertexLabel(fb, m + k)))
        if any(s <= 0 for s in _signs(g)):
            out.append(f"(iii) {name} n={n}")
    return out


def _cylinder_chain_failures(n: int) -> list[str]:
    out = []
    for name, (fa, fb, i0, extra) in CYLINDER_CHAINS.items():
        f = [resistance_cylinder(n, VertexLabel(fa, 1), VertexLabel(fb, i)) for i in range(i0, n + 1)]
        lo, hi = (n + extra) // 2, (n + extra + 1) // 2
        want = [1 if i < lo else 0 if i < hi else -1 for i in range(i0, n)]
        if _signs(f) != want:
            out.append(f"{name} n={n}")
    return out


def test_criterion_5_monotonicity_and_convexity():
    bad = []
    for n in range(1, 21):
        bad += _linear_chain_failures(n)
    for n in range(3, 21):
        bad += _cylinder_chain_failures(n)
    verdict(5, "monotonicity and convexity chains on L_n and R_n, n<=20, exact signs", not bad, ", ".join(bad[:5]) or "all hold")


# -- 6 ---------------------------------------------------------------------


def test_criterion_6_asymptotics():
    n = 200
    m = (n - 1) // 2
    rung = resistance_linear(n, P(n // 2), Q(n // 2))
    adj = resistance_linear(n, P(m), P(m + 1))
    d1 = float(abs(rung - SQRT2 / 2))
    d2 = float(abs(adj - (2 - SQRT2 / 2)))
    start = time.perf_counter()
    ratio = kirchhoff_cylinder(1000) / kirchhoff_linear(1000)
    elapsed = time.perf_counter() - start
    d3 = float(abs(ratio - Fraction(1, 2)))
    ok = d1 <= 1e-6 and d2 <= 1e-6 and d3 <= 2e-3 and elapsed < 30
    verdict(6, "asymptotic limits", ok,
            f"rung gap {d1:.1e}, adjacent gap {d2:.1e}, Kf ratio gap {d3:.2e} in {elapsed:.3f}s")


# -- 7 ---------------------------------------------------------------------


def test_criterion_7_k4_equivalent():
    worst = 0.0
    for n in range(1, 11):
        net = k4_equivalent(n).network()
        # vertices are (p_n, q_n, p_0, q_0)
        for (a, b), want in (((0, 1), seq_z(n)), ((0, 2), seq_x(n)), ((0, 3), seq_y(n))):
            worst = max(worst, abs(effective_resistance(net, a, b) - float(want)))
    verdict(7, "K4 equivalent reproduces x_n, y_n, z_n", worst <= 1e-9, f"max |delta| {worst:.2e}")


# -- 8 ---------------------------------------------------------------------


def _rand_quad(rng) -> QuadNum:
    a = Fraction(int(rng.integers(-50, 51)), int(rng.integers(1, 20)))
    b = Fraction(int(rng.integers(-50, 51)), int(rng.integers(1, 20)))
    return QuadNum(a, b)


def _rand_network(rng, max_vertices: int) -> ResistorNetwork:
    n = int(rng.integers(2, max_vertices + 1))
    edges = []
    for v in range(1, n):
        edges.append((int(rng.integers(0, v)), v))
    for _ in range(int(rng.integers(0, n + 1))):
        a, b = rng.choice(n, size=2, replace=False)
        edges.append((int(a), int(b)))
    return ResistorNetwork(n, tuple(Edge(a, b, Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 5))))
                                    for a, b in edges))


def _field_case(rng) -> bool:
    x, y, z = _rand_quad(rng), _rand_quad(rng), _rand_quad(rng)
    ok = (x + y) + z == x + (y + z) and x * (y * z) == (x * y) * z
    ok &= x + y == y + x and x * y == y * x and x * (y + z) == x * y + x * z
    ok &= x - x == 0 and (x * y).norm() == x.norm() * y.norm()
    if x:
        ok &= x * x.inverse() == 1
    ok &= x.sign() == (0 if x == 0 else (1 if float(x) > 0 else -1))
    return bool(ok)


def _metric_case(rng) -> bool:
    net = _rand_network(rng, 10)
    pinv = pseudo_inverse(build_laplacian(net))
    n = net.vertex_count
    a, b, c = (int(v) for v in rng.integers(0, n, size=3))
    rab, rba = pinv.resistance(a, b), pinv.resistance(b, a)
    rac, rcb = pinv.resistance(a, c), pinv.resistance(c, b)
    ok = abs(pinv.resistance(a, a)) < 1e-12 and abs(rab - rba) < 1e-12
    ok &= (rab > 0) == (a != b)
    ok &= rab <= rac + rcb + 1e-9
    return bool(ok)


def _replay_case(rng) -> bool:
    net = _rand_network(rng, 8)
    k = 2 if net.vertex_count < 3 or rng.random() < 0.5 else 3
    terms = [int(t) for t in rng.choice(net.vertex_count, size=k, replace=False)]
    trace = reduce_to_terminals(net, terms)
    if replay(net, trace.to_jsonl().splitlines()) != trace.final:
        return False
    if not trace.stuck:
        for (a, b), r in trace.resistances().items():
            if abs(float(r) - effective_resistance(net, a, b)) > 1e-9:
                return False
    return True


def _automorphism_case(rng) -> bool:
    kind = linear(int(rng.integers(1, 13))) if rng.random() < 0.5 else cylinder(int(rng.integers(3, 13)))
    labels = kind.labels
    i, j = rng.integers(0, len(labels), size=2)
    a, b = labels[i], labels[j]
    maps = automorphisms(kind)
    g = maps[int(rng.integers(0, len(maps)))]
    return resistance(kind, a, b) == resistance(kind, g(a), g(b)) == resistance(kind, b, a)


def _recurrence_case(rng) -> bool:
    n = int(rng.integers(1, 400))
    z0, z1 = seq_z(n - 1), seq_z(n)
    return z1 * (z0 + 5) == z0 + 4 and seq_t(n) == seq_t(n - 1) / (z0 + 5) and seq_x(n) - seq_y(n) == seq_t(n)


PROPERTY_SUITES = {
    "field axioms": _field_case,
    "metric axioms": _metric_case,
    "trace replay": _replay_case,
    "automorphism invariance": _automorphism_case,
    "recurrence fidelity": _recurrence_case,
}


def test_criterion_8_property_suites():
    rng = np.random.default_rng(SEED)
    counts, failures = {}, {}
    for name, case in PROPERTY_SUITES.items():
        bad = 0
        for _ in range(CASES):
            bad += not case(rng)
        counts[name], failures[name] = CASES, bad
    ok = all(v == 0 for v in failures.values()) and all(c >= 1000 for c in counts.values())
    detail = ", ".join(f"{name} {counts[name] - failures[name]}/{counts[name]}" for name in PROPERTY_SUITES)
    verdict(8, f"property suites, seed {SEED}", ok, detail)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
