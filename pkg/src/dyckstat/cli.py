"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or invariant error,
3 brute-force work cap exceeded, 4 I/O error.  JSON output keeps a fixed
key order and writes every count as a decimal string.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bijections as bj
from .diagram import render, render_pair
from .errors import DyckError, InvariantError, ResourceError
from .formulas import COUNT_IDS, count
from .oracle import brute_count
from .paths import DYCK, FREE, LatticePath, PathKind, enumerate_primitive, enumerate_words
from .reference import TABLE_COUNT_ID
from .series import named_gf, triangle
from .stats import MarkedPath, Statistic
from .verify import SUITES, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE, EXIT_IO = 0, 1, 2, 3, 4

VALLEY_TABLES = {"3.1", "3.2", "3.3"}
METHODS = ("formula", "series", "brute")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _value(method: str, cid: str, n: int, k: int | None, r: int | None) -> int:
    if method == "formula":
        return count(cid, n, k, r)
    if method == "brute":
        return brute_count(cid, n, k, r)
    if n < 0:
        raise DyckError("n must be nonnegative")
    return named_gf(cid, n, k=k or 0, r=r or 0)[n]


# -- subcommands ---------------------------------------------------------------


def cmd_enumerate(args, out) -> int:
    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    if args.kind == "dyck":
        words = enumerate_words(DYCK, 2 * n)
    elif args.kind == "free":
        words = enumerate_words(FREE, 2 * n)
    elif args.kind == "primitive":
        words = (p.steps for p in enumerate_primitive(2 * n))
    else:
        if args.end_level is None:
            raise UsageError("--kind partial needs --end-level")
        if not 0 <= args.end_level <= n:
            raise UsageError("--end-level must lie in 0..n")
        words = enumerate_words(PathKind("partial", args.end_level), 2 * n - args.end_level)
    words = list(words)
    if args.format == "json":
        out.write(_dump(words))
    else:
        out.writelines(w + "\n" for w in words)
    return EXIT_OK


def cmd_count(args, out) -> int:
    cid = args.id
    needs = COUNT_IDS[cid]
    k = args.k if "k" in needs else None
    r = args.r if "r" in needs else None
    value = _value(args.method, cid, args.n, k, r)
    if args.format == "lines":
        out.write(f"{value}\n")
        return EXIT_OK
    obj = {"id": cid, "n": args.n}
    if "k" in needs:
        obj["k"] = k
    if "r" in needs:
        obj["r"] = r
    obj["method"] = args.method
    obj["value"] = str(value)
    out.write(_dump(obj))
    return EXIT_OK


def _table_rows(table_id: str, rows: int, method: str) -> list[list[int | None]]:
    cid = TABLE_COUNT_ID[table_id]
    valley = table_id in VALLEY_TABLES
    width = (rows - 1) // 2 + 1 if valley else rows
    R = triangle(table_id, rows - 1) if method == "series" else None
    grid = []
    for n in range(rows):
        last = n // 2 if valley else n
        row = []
        for k in range(width):
            if k > last:
                row.append(None)
            elif R is not None:
                row.append(R.entry(n, k))
            else:
                row.append(_value(method, cid, n, k, None))
        grid.append(row)
    return grid


def cmd_table(args, out) -> int:
    if args.rows < 1:
        raise UsageError("--rows must be at least 1")
    grid = _table_rows(args.id, args.rows, args.method)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n/k"] + [str(k) for k in range(len(grid[0]))])
        for n, row in enumerate(grid):
            w.writerow([n] + ["" if v is None else v for v in row])
        out.write(buf.getvalue())
    else:
        out.write(_dump({
            "id": args.id,
            "count_id": TABLE_COUNT_ID[args.id],
            "method": args.method,
            "rows": [[None if v is None else str(v) for v in row] for row in grid],
        }))
    return EXIT_OK


# name -> (statistic of the marked input to the forward map, forward, inverse)
_BIJECTIONS = {
    "phi": (Statistic.PEAK, bj.phi, bj.phi_inv),
    "phi_prime": (Statistic.PEAK, bj.phi_prime, bj.phi_prime_inv),
    "theta": (Statistic.VALLEY, bj.theta, bj.theta_inv),
    "rho": (Statistic.VALLEY, bj.rho, bj.rho_inv),
    "eta": (Statistic.PEAK, bj.eta, bj.eta_inv),
    "valley_shift": (Statistic.VALLEY, bj.valley_shift, bj.valley_shift_inv),
}
_PAIR_OUTPUT = {"phi", "phi_prime", "theta", "rho"}


def _encode(obj):
    if isinstance(obj, bj.PathPair):
        return {"first": obj.first.steps, "second": obj.second.steps}
    if isinstance(obj, MarkedPath):
        return obj.path.steps
    return obj


def _marked(word: str, stat: Statistic, mark: int | None) -> MarkedPath:
    if mark is None:
        raise UsageError("a marked path needs --mark")
    return MarkedPath(LatticePath(word), stat, mark)


def cmd_bijection(args, out) -> int:
    name, apply = args.name, args.direction == "apply"
    inputs = args.input
    if name == "pyramid":
        if len(inputs) != 1:
            raise UsageError("pyramid takes one path")
        if args.j is None:
            raise UsageError("pyramid needs --j")
        m = _marked(inputs[0], Statistic.PEAK, args.mark)
        res = bj.pyramid_lift(m, args.j) if apply else bj.pyramid_drop(m, args.j)
        src = {"path": m.path.steps, "mark": m.index}
    else:
        stat, fwd, inv = _BIJECTIONS[name]
        pair_in = not apply and name in _PAIR_OUTPUT
        if pair_in:
            if len(inputs) != 2:
                raise UsageError(f"{name} --direction invert takes a pair: two paths")
            pair = bj.PathPair(LatticePath(inputs[0]), LatticePath(inputs[1]))
            res = inv(pair)
            src = _encode(pair)
        else:
            if len(inputs) != 1:
                raise UsageError(f"{name} --direction {args.direction} takes one marked path")
            if not apply:
                # eta_inv takes a marked symmetric valley, valley_shift_inv a left one
                stat = Statistic.VALLEY
            m = _marked(inputs[0], stat, args.mark)
            res = (fwd if apply else inv)(m)
            src = {"path": m.path.steps, "mark": m.index}
    obj = {
        "name": name,
        "direction": args.direction,
        "input": src,
        "output": _encode(res),
        "mark": res.index if isinstance(res, MarkedPath) else None,
    }
    if isinstance(res, MarkedPath):
        obj["statistic"] = res.statistic.value
    out.write(_dump(obj))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    report = verify_suite(args.suite, args.max_n)
    if args.format == "lines":
        for c in report.checks:
            flag = "PASS" if c.passed else "FAIL"
            extra = f" [{c.counterexample}]" if c.counterexample else ""
            out.write(f"{flag} {c.name}: {c.detail}{extra}\n")
        out.write(f"{len(report.checks) - len(report.failures)}/{len(report.checks)} passed\n")
    else:
        out.write(_dump(report.to_dict()))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_diagram(args, out) -> int:
    paths = args.paths
    if len(paths) == 2 and args.mark is None:
        svg = render_pair(LatticePath(paths[0]), LatticePath(paths[1]))
    elif len(paths) == 1:
        p = LatticePath(paths[0])
        item = p if args.mark is None else MarkedPath(p, Statistic(args.stat), args.mark)
        svg = render([item])
    else:
        raise UsageError("diagram takes one path (optionally marked) or a pair of two paths")
    if args.out in (None, "-"):
        out.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dyckstat", description="Peaks and valleys in Dyck paths: counts, tables and bijections.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="list paths in canonical order")
    e.add_argument("--kind", choices=("dyck", "partial", "free", "primitive"), required=True)
    e.add_argument("--n", type=int, required=True, help="semilength (partial: length is 2n - end level)")
    e.add_argument("--end-level", type=int)
    e.add_argument("--format", choices=("lines", "json"), default="lines")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("count", help="one count by formula, series or enumeration")
    c.add_argument("--id", choices=tuple(COUNT_IDS), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, default=0)
    c.add_argument("--r", type=int, default=0)
    c.add_argument("--method", choices=METHODS, default="formula")
    c.add_argument("--format", choices=("json", "lines"), default="json")
    c.set_defaults(func=cmd_count)

    t = sub.add_parser("table", help="a published triangle")
    t.add_argument("--id", choices=tuple(TABLE_COUNT_ID), required=True)
    t.add_argument("--rows", type=int, default=6)
    t.add_argument("--method", choices=METHODS, default="formula")
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("bijection", help="apply or invert a bijection")
    b.add_argument("--name", choices=("pyramid",) + tuple(_BIJECTIONS), required=True)
    b.add_argument("--direction", choices=("apply", "invert"), default="apply")
    b.add_argument("--mark", type=int, help="index of the marked peak/valley in scan order")
    b.add_argument("--j", type=int, help="pyramid height")
    b.add_argument("input", nargs="+", help="a path, or two paths forming a pair")
    b.set_defaults(func=cmd_bijection)

    v = sub.add_parser("verify", help="run self-verification suites")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--max-n", type=int, default=5)
    v.add_argument("--format", choices=("json", "lines"), default="json")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("diagram", help="SVG drawing of a path or a pair")
    d.add_argument("paths", nargs="+")
    d.add_argument("--mark", type=int)
    d.add_argument("--stat", choices=("peak", "valley"), default="peak")
    d.add_argument("--out", help="output file, '-' or omitted for stdout")
    d.set_defaults(func=cmd_diagram)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"dyckstat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"dyckstat: invariant violated: {exc.invariant}"
              + (f" ({exc.detail})" if exc.detail else ""), file=sys.stderr)
        return EXIT_USAGE
    except DyckError as exc:
        print(f"dyckstat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"dyckstat: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"dyckstat: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
