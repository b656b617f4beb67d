"""Command-line interface: ``isoring <command> [options]``.

Every command prints plain text by default or a JSON envelope with
``--format json``::

    {"command": "gfp", "format_version": "1", "result": {...}}

Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import arith, logexp, matrices, polya
from .errors import IsoringError
from .partitions import parse_partition
from .poly import Poly, render_scalar_or_poly
from .schur import character, character_table, schur
from .sequences import GFP, GLP, Core, Seq, Weight

FORMAT_VERSION = "1"
DEFAULT_MAX_N = 64


class UsageError(Exception):
    pass


def max_n() -> int:
    raw = os.environ.get("ISORING_MAX_N", str(DEFAULT_MAX_N))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ISORING_MAX_N must be an integer, got {raw!r}") from None


def _bounded(n: int, what: str = "--n") -> int:
    if n < 0:
        raise UsageError(f"{what} must be non-negative")
    if n > max_n():
        raise UsageError(f"{what}={n} exceeds ISORING_MAX_N={max_n()}")
    return n


# --------------------------------------------------------------------------
# value and sequence codecs


def format_value(v) -> str:
    return render_scalar_or_poly(v)


def parse_value(text: str):
    text = text.strip().replace("−", "-")
    if any(c.isalpha() for c in text):
        return Poly.parse(text)
    return Fraction(text)


def sequence_payload(values: Sequence, core: Core | None, kind: str, start: int = 0) -> dict:
    return {
        "core": core.to_json() if core is not None else None,
        "kind": kind,
        "values": [{"n": start + i, "poly": format_value(v)} for i, v in enumerate(values)],
    }


def sequence_from_payload(data: dict) -> list:
    """Values of a sequence payload, ordered by index (indices must run 0, 1, 2, ...)."""
    items = sorted(data["values"], key=lambda d: d["n"])
    if [d["n"] for d in items] != list(range(len(items))):
        raise UsageError("sequence payload must list indices 0, 1, 2, ... without gaps")
    return [parse_value(d["poly"]) for d in items]


def _read_source(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    with open(spec[1:] if spec.startswith("@") else spec, encoding="utf-8") as fh:
        return fh.read()


def parse_stream(text: str) -> list:
    """A sequence from JSON (a payload or envelope), or rationals separated by commas or newlines."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        if "result" in data:
            data = data["result"]
        return sequence_from_payload(data)
    items = [s for s in stripped.replace("\n", ",").split(",") if s.strip()]
    if not items:
        raise UsageError("empty value stream")
    return [parse_value(s) for s in items]


def load_sequence(spec: str) -> list:
    """``"1,2,3"`` inline, ``@path`` from a file, or ``-`` from stdin."""
    if spec == "-" or spec.startswith("@"):
        return parse_stream(_read_source(spec))
    return parse_stream(spec)


def core_from_args(args, required: bool = True) -> Core | None:
    if getattr(args, "core", None):
        return Core.parse(args.core)
    if getattr(args, "k", None) is not None:
        if args.k < 1:
            raise UsageError("--k must be >= 1")
        return Core.generic(args.k)
    if required:
        raise UsageError("give a generic degree with --k or an evaluated core with --core")
    return None


def parse_weight(text: str) -> Weight:
    if text == "gfp" or text == "ones":
        return GFP
    if text == "glp" or text == "ramp":
        return GLP
    if ":" in text:
        scheme, _, param = text.partition(":")
        if scheme in ("shifted", "hook") and param.isdigit():
            return Weight(scheme, int(param))
    try:
        return Weight.explicit([int(x) for x in text.split(",")])
    except ValueError:
        raise UsageError(f"bad weight {text!r}; use gfp, glp, shifted:j, hook:j or a list like 0,1") from None


def parse_rows(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        a, b = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad row range {text!r}; expected a..b") from None
    if a > b:
        raise UsageError("row range must be increasing")
    return a, b


def matrix_payload(M: list[list], core: Core) -> dict:
    return {"core": core.to_json(), "matrix": [[format_value(x) for x in row] for row in M]}


def matrix_from_payload(data: dict) -> list[list]:
    return [[parse_value(x) for x in row] for row in data["matrix"]]


def window_from_payload(data: dict) -> dict[int, list]:
    return {d["n"]: [parse_value(x) for x in d["row"]] for d in data["rows"]}


# --------------------------------------------------------------------------
# commands; each returns (result payload, text rendering)


def _sequence_command(args, weight: Weight, kind: str):
    core = core_from_args(args)
    n = _bounded(args.n)
    seq = Seq(core, weight, n_max=n)
    if args.all:
        values, start = seq.take(n), 0
    else:
        values, start = [seq[n]], n
    text = "\n".join(f"{kind}_{start + i} = {format_value(v)}" for i, v in enumerate(values)) if args.all \
        else format_value(values[0])
    return sequence_payload(values, core, kind, start), text


def cmd_gfp(args):
    return _sequence_command(args, GFP, "GFP")


def cmd_glp(args):
    return _sequence_command(args, GLP, "GLP")


def cmd_weighted(args):
    return _sequence_command(args, parse_weight(args.weight), "Weighted")


def _input_sequence(args, flag: str = "seq") -> list:
    spec = getattr(args, flag)
    if spec is not None:
        values = load_sequence(spec)
        _bounded(len(values) - 1, f"--{flag} length")
        return values
    core = core_from_args(args)
    return Seq(core).take(_bounded(args.n))


def _seq_result(values, core, kind):
    text = "\n".join(f"{i}: {format_value(v)}" for i, v in enumerate(values))
    return sequence_payload(values, core, kind), text


def cmd_log(args):
    P = _input_sequence(args)
    core = core_from_args(args, required=args.seq is None)
    return _seq_result(logexp.log_op(P, core), core, "LOG")


def cmd_exp(args):
    G = load_sequence(args.seq)
    _bounded(len(G) - 1, "--seq length")
    return _seq_result(logexp.exp_op(G), None, "EXP")


def cmd_conv(args):
    P, Q = load_sequence(args.seq), load_sequence(args.seq2)
    n = min(len(P), len(Q)) - 1
    return _seq_result(logexp.conv(P, Q, _bounded(n, "sequence length")), None, "CONV")


def cmd_conv_inverse(args):
    return _seq_result(logexp.conv_inverse(_input_sequence(args)), None, "CONV_INVERSE")


def cmd_conv_power(args):
    if args.r < 1:
        raise UsageError("--r must be a positive integer")
    return _seq_result(logexp.conv_power(_input_sequence(args), args.r), None, "CONV_POWER")


def _render_rows(M) -> str:
    cells = [[format_value(x) for x in row] for row in M]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def _window_result(window: matrices.MatrixWindow):
    lines = [f"{n:>4} | " + "  ".join(format_value(x) for x in row) for n, row in sorted(window.rows.items())]
    return window.to_json(), "\n".join(lines)


def cmd_companion(args):
    core = core_from_args(args)
    M = matrices.companion(core)
    return matrix_payload(M, core), _render_rows(M)


def cmd_inf_companion(args):
    core = core_from_args(args)
    a, b = parse_rows(args.rows)
    _bounded(b - a, "row count")
    return _window_result(matrices.infinite_companion(core, a, b))


def cmd_different(args):
    core = core_from_args(args)
    if args.rows:
        a, b = parse_rows(args.rows)
        _bounded(b - a, "row count")
        return _window_result(matrices.infinite_different(core, a, b))
    M = matrices.different_matrix(core)
    return matrix_payload(M, core), _render_rows(M)


def cmd_discriminant(args):
    core = core_from_args(args)
    d = matrices.discriminant(core)
    return {"core": core.to_json(), "discriminant": format_value(d)}, format_value(d)


def cmd_schur(args):
    shape = parse_partition(args.shape)
    _bounded(sum(shape), "|shape|")
    core = core_from_args(args, required=False)
    res = schur(shape, core)
    text = "\n".join([
        f"S_{args.shape} = {format_value(res.expanded)}",
        f"F-form: {res.f_form}",
        f"G-basis: {res.g_basis}",
    ])
    return res.to_json(), text


def cmd_char(args):
    shape = parse_partition(args.shape)
    vec = character(shape, max_n())
    text = "\n".join(f"{','.join(map(str, c))}: {v}" for c, v in zip(vec.classes, vec.values))
    return vec.to_json(), text


def cmd_char_table(args):
    n = _bounded(args.n)
    table = character_table(n, max_n())
    classes = table[0].classes if table else []
    header = ["shape"] + [".".join(map(str, c)) for c in classes]
    rows = [[",".join(map(str, r.shape))] + [str(v) for v in r.values] for r in table]
    sep = "," if args.format == "csv" else "\t"
    text = "\n".join(sep.join(f'"{c}"' if sep == "," and "," in c else c for c in row) for row in [header] + rows)
    payload = {"n": n, "classes": [list(c) for c in classes], "rows": [r.to_json() for r in table]}
    return payload, text


def _group(args) -> polya.PermGroup:
    if args.perms:
        return polya.PermGroup.from_cycles(args.perms, args.degree)
    if args.group:
        return polya.PermGroup.parse(args.group)
    raise UsageError("give --group NAME:n or --perms \"(1 2 3);(1 2)\"")


def cmd_polya(args):
    group = _group(args)
    if args.action == "indicator":
        ci = polya.cycle_indicator(group)
        text = f"({ci.numerator}) / {ci.order}"
        if args.in_t:
            text = f"({ci.in_t()}) / {ci.order}"
        return ci.to_json(), text
    if args.action == "count":
        if args.colors is None:
            raise UsageError("polya count needs --colors")
        c = polya.count_colorings(group, args.colors)
        return {"order": group.order, "colors": args.colors, "count": c}, str(c)
    if args.multiset is None:
        raise UsageError("polya pattern needs --multiset")
    ms = polya.parse_multiset(args.multiset)
    c = polya.pattern_count(group, ms)
    inventory = polya.pattern_inventory(group, list(ms))
    payload = {"order": group.order, "multiset": ms, "count": c,
               "inventory": polya.inventory_text(inventory, list(ms))}
    return payload, str(c)


def _arith_fn(args) -> arith.ArithFn:
    if not args.fn:
        raise UsageError("give --fn NAME")
    return arith.get_function(args.fn)


def _rep(args) -> arith.LocalRep:
    f = _arith_fn(args)
    n = _bounded(args.n)
    return arith.local_rep(f, args.prime, n) if args.prime else arith.global_rep(f, n)


def _rep_text(rep: arith.LocalRep) -> str:
    where = f"p = {rep.prime}" if rep.prime else "global"
    core = "[" + ", ".join(str(t) for t in rep.core_values()) + "]"
    lines = [f"{rep.name} ({where})", f"core: {core}" + ("" if rep.finite else f"  (no finite core up to degree {rep.n_max})"),
             "F: " + ", ".join(str(v) for v in rep.values),
             "G: " + ", ".join(str(v) for v in rep.log())]
    return "\n".join(lines)


def cmd_arith(args):
    action = args.action
    if action == "rep":
        rep = _rep(args)
        payload = rep.to_json()
        payload["log"] = [str(v) for v in rep.log()]
        return payload, _rep_text(rep)
    if action == "core":
        if args.values is not None:
            values = load_sequence(args.values)
        elif args.file is not None:
            values = parse_stream(_read_source(args.file))
        else:
            values = parse_stream(sys.stdin.read())
        core = arith.infer_core(values)
        payload = {"core": [str(t) for t in core.values], "degree": core.degree, "inputs": len(values)}
        return payload, "[" + ", ".join(str(t) for t in core.values) + "]"
    if action == "dlog":
        f = _arith_fn(args)
        if args.N < 1:
            raise UsageError("--N must be positive")
        L = arith.rearick_log(f, args.N)
        payload = {"function": f.name, "N": args.N, "values": {str(n): v.to_json() for n, v in L.items()}}
        return payload, "\n".join(f"{n}: {v}" for n, v in L.items())
    if action == "trig":
        rep = _rep(args)
        pair = arith.trig(rep, rep.n_max)
        text = "\n".join(f"{n}: C = {c}, S = {s}" for n, (c, s) in enumerate(zip(pair.cos, pair.sin)))
        return pair.to_json(), text
    f = _arith_fn(args)
    if args.N < 1:
        raise UsageError("--N must be positive")
    report = arith.representability_check(f, min(args.N, max_n()))
    payload = report.to_json()
    text = "\n".join([
        f"{f.name}: multiplicative={report.multiplicative}",
        f"locally representable: {report.locally_representable}",
        f"globally representable: {report.globally_representable}",
    ] + [f"  p={p}: core [{', '.join(str(t) for t in r.core_values())}]" + ("" if r.finite else " (power series)")
         for p, r in sorted(report.local.items())])
    return payload, text


# --------------------------------------------------------------------------
# parser


def _add_core_flags(p: argparse.ArgumentParser, n: bool = True) -> None:
    p.add_argument("--k", type=int, help="degree of a generic (symbolic) core")
    p.add_argument("--core", help='evaluated core, e.g. "2,-1"')
    if n:
        p.add_argument("--n", type=int, default=8, help="index or truncation bound (default 8)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isoring", description="Exact computations in the isobaric ring.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in [("gfp", cmd_gfp, "generalized Fibonacci polynomial F_n"),
                            ("glp", cmd_glp, "generalized Lucas polynomial G_n"),
                            ("weighted", cmd_weighted, "weighted isobaric polynomial")]:
        p = sub.add_parser(name, parents=[fmt], help=help_)
        _add_core_flags(p)
        p.add_argument("--all", action="store_true", help="print indices 0..n")
        if name == "weighted":
            p.add_argument("--weight", required=True, help="gfp, glp, shifted:j, hook:j or e.g. 0,1")
        p.set_defaults(func=fn)

    p = sub.add_parser("log", parents=[fmt], help="LOG of a sequence (default: GFP of the core)")
    _add_core_flags(p)
    p.add_argument("--seq", help='input sequence: "1,2,3", @file or -')
    p.set_defaults(func=cmd_log)

    p = sub.add_parser("exp", parents=[fmt], help="EXP of a sequence")
    p.add_argument("--seq", required=True)
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("conv", parents=[fmt], help="convolution product of two sequences")
    p.add_argument("--seq", required=True)
    p.add_argument("--seq2", required=True)
    p.set_defaults(func=cmd_conv)

    for name, fn in [("conv-inverse", cmd_conv_inverse), ("conv-power", cmd_conv_power)]:
        p = sub.add_parser(name, parents=[fmt])
        _add_core_flags(p)
        p.add_argument("--seq")
        if name == "conv-power":
            p.add_argument("--r", type=int, required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("companion", parents=[fmt], help="k x k companion matrix")
    _add_core_flags(p, n=False)
    p.set_defaults(func=cmd_companion)

    p = sub.add_parser("inf-companion", parents=[fmt], help="rows of the infinite companion matrix")
    _add_core_flags(p, n=False)
    p.add_argument("--rows", default="0..8", help="row range a..b (default 0..8)")
    p.set_defaults(func=cmd_inf_companion)

    p = sub.add_parser("different", parents=[fmt], help="different matrix, or rows of its infinite extension")
    _add_core_flags(p, n=False)
    p.add_argument("--rows", help="row range a..b of the infinite different matrix")
    p.set_defaults(func=cmd_different)

    p = sub.add_parser("discriminant", parents=[fmt])
    _add_core_flags(p, n=False)
    p.set_defaults(func=cmd_discriminant)

    p = sub.add_parser("schur", parents=[fmt], help="Schur polynomial by Jacobi-Trudi")
    _add_core_flags(p, n=False)
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("char", parents=[fmt], help="irreducible character of S_n")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("char-table", parents=[fmt], help="character table of S_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("polya", parents=[fmt], help="cycle indicators and Polya counting")
    p.add_argument("action", choices=["indicator", "count", "pattern"])
    p.add_argument("--group", help="dihedral:n, cyclic:n, symmetric:n or trivial:n")
    p.add_argument("--perms", help='generators in cycle notation, e.g. "(1 2 3 4);(1 3)"')
    p.add_argument("--degree", type=int, help="number of points for --perms")
    p.add_argument("--colors", type=int)
    p.add_argument("--multiset", help="e.g. x:2,y:2")
    p.add_argument("--in-t", action="store_true", help="write the indicator in t-variables")
    p.set_defaults(func=cmd_polya)

    p = sub.add_parser("arith", parents=[fmt], help="arithmetic functions")
    p.add_argument("action", choices=["rep", "core", "dlog", "trig", "check"])
    p.add_argument("--fn", help=", ".join(arith.BUILTINS))
    p.add_argument("--prime", type=int, help="local representation at this prime (omit for global)")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--N", type=int, default=50)
    p.add_argument("--values", help='value stream for "core": "1,2,3", @file or -')
    p.add_argument("--file", help='file with one rational per line for "core"')
    p.set_defaults(func=cmd_arith)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.format == "csv" and args.command != "char-table":
            raise UsageError("--format csv is only available for char-table")
        result, text = args.func(args)
    except UsageError as exc:
        print(f"isoring: usage error: {exc}", file=err)
        return 2
    except (IsoringError, ValueError, ArithmeticError, OSError) as exc:
        print(f"isoring: error: {exc}", file=err)
        return 1
    if args.format == "json":
        envelope = {"command": args.command, "format_version": FORMAT_VERSION, "result": result}
        print(json.dumps(envelope, sort_keys=True, indent=2), file=out)
    else:
        print(text, file=out)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
