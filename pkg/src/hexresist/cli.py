"""``hexresist`` command line.

Exit status: 0 on success, 1 when a verification (or a reduction) fails,
2 for bad arguments or unreadable input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .chains import (
    ChainKind,
    LabelError,
    VertexLabel,
    asymptotic_limits,
    build_chain,
    extremal_pairs,
    kirchhoff_cylinder,
    kirchhoff_linear,
    label_pairs,
    resistance,
)
from .network import NetworkError, build_laplacian, format_resistance, read_network
from .oracle import DisconnectedNetworkError, kirchhoff_index, pseudo_inverse, resistance_matrix
from .quadfield import QuadNum
from .reduction import ReductionError, reduce_to_terminals

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class ResistanceReport:
    chain: str
    n: int
    a: str
    b: str
    exact: str | None
    decimal: str
    method: str
    delta: float | None = None

    def to_json(self) -> dict:
        out = {
            "chain": self.chain,
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "exact": self.exact,
            "decimal": self.decimal,
            "method": self.method,
        }
        if self.delta is not None:
            out["delta"] = self.delta
        return out


def _strip(text: str) -> str:
    if "." in text and "e" not in text:
        text = text.rstrip("0").rstrip(".")
    return text


def _dec(value, digits: int) -> str:
    if isinstance(value, float):
        return _strip(format(value, f".{digits}g"))
    return _strip(QuadNum.coerce(value).to_decimal(digits))


def _kind(args) -> ChainKind:
    try:
        return ChainKind(args.chain, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _label(kind: ChainKind, text: str) -> VertexLabel:
    lab = VertexLabel.parse(text)
    if not kind.is_linear and lab.index == 0:
        raise LabelError(f"{lab.cli}: cylinder indices run over 1..{kind.n}")
    return kind.normalize(lab)


def _oracle(kind: ChainKind):
    return pseudo_inverse(build_laplacian(build_chain(kind)))


def _pair_value(kind, a, b, method, pinv=None):
    if method == "formula":
        return resistance(kind, a, b)
    if method == "oracle":
        pinv = pinv or _oracle(kind)
        return float(pinv.resistance(kind.position[a], kind.position[b]))
    tr = reduce_to_terminals(build_chain(kind), (str(a), str(b)))
    if tr.stuck:
        return None
    return tr.resistance


def _report(kind, a, b, value, method, digits, pinv=None, check=False) -> ResistanceReport:
    exact = None if isinstance(value, float) else format_resistance(value)
    delta = None
    if check and method != "oracle":
        pinv = pinv or _oracle(kind)
        delta = abs(float(value) - pinv.resistance(kind.position[a], kind.position[b]))
    return ResistanceReport(kind.kind, kind.n, a.cli, b.cli, exact, _dec(value, digits), method, delta)


def cmd_resist(args, out) -> int:
    kind = _kind(args)
    a, b = _label(kind, args.a), _label(kind, args.b)
    value = _pair_value(kind, a, b, args.method)
    if value is None:
        print(f"reduction got stuck for {a.cli}, {b.cli} on {kind}", file=sys.stderr)
        return EXIT_FAIL
    rep = _report(kind, a, b, value, args.method, args.digits, check=args.check)
    if args.json:
        print(json.dumps(rep.to_json()), file=out)
        return EXIT_OK
    text = rep.exact if args.exact and rep.exact is not None else rep.decimal
    if rep.delta is not None:
        text += f"  (delta vs oracle {rep.delta:.3e})"
    print(text, file=out)
    return EXIT_OK


def cmd_kf(args, out) -> int:
    kind = _kind(args)
    if args.method == "oracle":
        value = float(kirchhoff_index(build_chain(kind)))
    elif kind.is_linear:
        if kind.n < 1:
            raise UsageError("kf needs n >= 1 for the linear chain")
        value = kirchhoff_linear(kind.n)
    else:
        value = kirchhoff_cylinder(kind.n)
    exact = None if isinstance(value, float) else format_resistance(value)
    if args.json:
        print(json.dumps({"chain": kind.kind, "n": kind.n, "exact": exact, "decimal": _dec(value, args.digits),
                          "method": args.method}), file=out)
    else:
        print(exact if args.exact and exact else _dec(value, args.digits), file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    kind = _kind(args)
    pinv = _oracle(kind) if args.method == "oracle" or args.check else None
    labels = kind.labels
    reports = []
    cells: dict[tuple[int, int], str] = {}
    for a, b in label_pairs(kind):
        value = _pair_value(kind, a, b, args.method, pinv)
        if value is None:
            print(f"reduction got stuck for {a.cli}, {b.cli}", file=sys.stderr)
            return EXIT_FAIL
        rep = _report(kind, a, b, value, args.method, args.digits, pinv, args.check)
        reports.append(rep)
        i, j = kind.position[a], kind.position[b]
        cells[i, j] = cells[j, i] = rep.decimal
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=1), file=out)
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + [lab.cli for lab in labels])
    for i, lab in enumerate(labels):
        w.writerow([lab.cli] + [cells.get((i, j), "0") for j in range(len(labels))])
    out.write(buf.getvalue())
    return EXIT_OK


def cmd_extremal(args, out) -> int:
    kind = _kind(args)
    if kind.is_linear and kind.n < 1:
        raise UsageError("extremal needs n >= 1")
    ex = extremal_pairs(kind)
    rows = [
        ("max", ex.max_pair, ex.max_value),
        ("min", ex.min_pair, ex.min_value),
    ]
    if args.json:
        obj = {
            key: {"a": p[0].cli, "b": p[1].cli, "exact": format_resistance(v), "decimal": _dec(v, args.digits)}
            for key, p, v in rows
        }
        print(json.dumps({"chain": kind.kind, "n": kind.n, **obj}), file=out)
    else:
        for key, p, v in rows:
            print(f"{key} {p[0].cli} {p[1].cli} {_dec(v, args.digits)}", file=out)
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    try:
        net = read_network(args.input)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    terms = [t for t in args.terminals.replace(",", " ").split() if t]
    parsed = []
    for t in terms:
        if t in net.vertex_names:
            parsed.append(net.index(t))
        elif t.isdigit():
            parsed.append(int(t))
        else:
            raise UsageError(f"unknown terminal {t!r}")
    trace = reduce_to_terminals(net, parsed, max_delta_y=args.max_delta_y)
    out.write(trace.to_jsonl())
    result = {"kind": "result", "status": trace.status, "terminals": [net.vertex_names[t] for t in trace.terminals]}
    result["resistances"] = [
        {"a": net.vertex_names[a], "b": net.vertex_names[b], "r": format_resistance(r), "decimal": _dec(r, args.digits)}
        for (a, b), r in trace.resistances().items()
    ]
    print(json.dumps(result), file=out)
    return EXIT_FAIL if trace.stuck else EXIT_OK


def _chains(which: str, n_min: int | None, n_max: int) -> list[ChainKind]:
    families = ["linear", "cylinder"] if which == "both" else [which]
    kinds = []
    for fam in families:
        lo = n_min if n_min is not None else (1 if fam == "linear" else 3)
        lo = max(lo, 0 if fam == "linear" else 3)
        kinds += [ChainKind(fam, n) for n in range(lo, n_max + 1)]
    return kinds


def cmd_verify(args, out) -> int:
    kinds = _chains(args.chain, args.n_min, args.n_max)
    if not kinds:
        raise UsageError("no chains in the requested range")
    worst = 0.0
    for kind in kinds:
        mat = resistance_matrix(build_chain(kind))
        exact = np.zeros_like(mat)
        for a, b in label_pairs(kind):
            i, j = kind.position[a], kind.position[b]
            exact[i, j] = exact[j, i] = float(resistance(kind, a, b))
        delta = float(np.max(np.abs(exact - mat))) if mat.size else 0.0
        worst = max(worst, delta)
        print(f"{kind}: {len(kind.labels) * (len(kind.labels) - 1) // 2} pairs, max delta {delta:.3e}", file=out)
    if args.samples:
        rng = np.random.default_rng(args.seed)
        linear_kinds = [k for k in kinds if k.is_linear] or [ChainKind("linear", 2)]
        for _ in range(args.samples):
            kind = linear_kinds[rng.integers(len(linear_kinds))]
            i, j = rng.choice(len(kind.labels), size=2, replace=False)
            a, b = kind.labels[i], kind.labels[j]
            tr = reduce_to_terminals(build_chain(kind), (str(a), str(b)))
            if tr.stuck or tr.resistance != resistance(kind, a, b):
                print(f"reduction mismatch on {kind} {a.cli} {b.cli}", file=out)
                worst = float("inf")
        print(f"reduction samples: {args.samples} (seed {args.seed})", file=out)
    ok = worst <= args.tol
    print(f"max delta {worst:.3e} (tol {args.tol:g}): {'PASS' if ok else 'FAIL'}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_limits(args, out) -> int:
    if args.n is not None:
        kind = _kind(args)
    rows = []
    for lim in asymptotic_limits(args.chain):
        row = {"name": lim.name, "expression": lim.expression, "exact": format_resistance(lim.value),
               "decimal": _dec(lim.value, args.digits)}
        if args.n is not None:
            at = lim.at(kind.n)
            row["at_n"] = _dec(at, args.digits)
            row["gap"] = f"{float(abs(at - lim.value)):.3e}"
        rows.append(row)
    if args.json:
        print(json.dumps(rows), file=out)
        return EXIT_OK
    for row in rows:
        line = f"{row['name']}: {row['expression']} -> {row['decimal']}"
        if "at_n" in row:
            line += f"  [n={args.n}: {row['at_n']}, gap {row['gap']}]"
        print(line, file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hexresist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def chain_opts(p, need_n=True, both=False):
        choices = ["linear", "cylinder", "both"] if both else ["linear", "cylinder"]
        p.add_argument("--chain", required=True, choices=choices)
        if need_n:
            p.add_argument("--n", type=int, required=True)

    def digits(p):
        p.add_argument("--digits", type=int, default=12, help="significant digits (default 12)")

    p = sub.add_parser("resist", help="resistance between two vertices")
    chain_opts(p)
    p.add_argument("--a", required=True, help="label such as p:0")
    p.add_argument("--b", required=True)
    p.add_argument("--method", choices=["formula", "oracle", "reduction"], default="formula")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--check", action="store_true", help="also report the delta against the oracle")
    digits(p)
    p.set_defaults(func=cmd_resist)

    p = sub.add_parser("kf", help="Kirchhoff index")
    chain_opts(p)
    p.add_argument("--method", choices=["formula", "oracle"], default="formula")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--json", action="store_true")
    digits(p)
    p.set_defaults(func=cmd_kf)

    p = sub.add_parser("table", help="full pair matrix")
    chain_opts(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--method", choices=["formula", "oracle", "reduction"], default="formula")
    p.add_argument("--check", action="store_true")
    digits(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("extremal", help="farthest and closest pairs")
    chain_opts(p)
    p.add_argument("--json", action="store_true")
    digits(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("reduce", help="reduce a network file to its terminals")
    p.add_argument("input", type=Path)
    p.add_argument("--terminals", required=True, help="2 or 3 vertex names or indices, comma separated")
    p.add_argument("--max-delta-y", type=int, default=None)
    digits(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="closed forms against the oracle")
    chain_opts(p, need_n=False, both=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--samples", type=int, default=0, help="random reduction cross-checks on L_n")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("limits", help="asymptotic constants")
    chain_opts(p, need_n=False)
    p.add_argument("--n", type=int, default=None, help="also evaluate the finite-n quantity")
    p.add_argument("--json", action="store_true")
    digits(p)
    p.set_defaults(func=cmd_limits)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "digits", 12) < 1:
        parser.error("--digits must be >= 1")
    try:
        return args.func(args, out)
    except (UsageError, LabelError, NetworkError, ReductionError, DisconnectedNetworkError, ValueError) as exc:
        print(f"hexresist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
