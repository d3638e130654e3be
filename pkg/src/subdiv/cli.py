"""Command-line front end: compute, subdivide, certify, verify.

Exit codes are CI-oriented: 0 on success, 1 when a mathematical check
fails (a verify suite reports failures, `interlace` answers false, an
input triangulation is not uniform), 2 on usage or input errors.  All
result output goes to stdout and is byte-stable for fixed inputs;
wall-clock timings go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import verify as verify_mod
from .complexes import SchemaError, complex_from_json
from .localh import c_coefficients, local_h, local_h_via_uniform
from .perm import MAX_ENUM_N, E_nr, d_nk, d_nkj, p_nk
from .poly import Poly, PolyParseError, format_poly, parse_poly, poly_to_json
from .realroot import interlace_report
from .triangulate import (
    NotUniformError,
    Triangulation,
    barycentric,
    edgewise,
    f_triangle,
    f_triangle_of,
    identity,
    random_triangulation,
    stellar,
    triangulation_from_json,
    triangulation_to_json,
)

FORMATS = ("text", "json", "csv")

TABLES_N_CAP = 8

_CONFIG_KEYS = ("prng", "max_enum_n", "format", "seed", "jobs")


class CliError(Exception):
    """Usage or input problem; maps to exit code 2."""


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as err:
        raise CliError(f"cannot read config: {err}") from err
    except json.JSONDecodeError as err:
        raise CliError(f"config is not valid JSON: {err}") from err
    if not isinstance(raw, dict):
        raise CliError("config must be a JSON object")
    for key in raw:
        if key not in _CONFIG_KEYS:
            raise CliError(
                f"unknown config key {key!r}; allowed: {', '.join(_CONFIG_KEYS)}")
    if "prng" in raw and raw["prng"] != "mt19937":
        raise CliError("config pins prng to an algorithm this build does not "
                       "provide; only 'mt19937' is available")
    if "max_enum_n" in raw and raw["max_enum_n"] != MAX_ENUM_N:
        raise CliError(f"config pins max_enum_n={raw['max_enum_n']!r} but this "
                       f"build enumerates up to S_{MAX_ENUM_N}")
    if "format" in raw and raw["format"] not in FORMATS:
        raise CliError(f"config format must be one of {', '.join(FORMATS)}")
    if "seed" in raw and (isinstance(raw["seed"], bool)
                          or not isinstance(raw["seed"], int)):
        raise CliError("config seed must be an integer")
    if "jobs" in raw and (isinstance(raw["jobs"], bool)
                          or not isinstance(raw["jobs"], int) or raw["jobs"] < 1):
        raise CliError("config jobs must be a positive integer")
    return raw


def _resolve(args, config: dict):
    fmt = args.format or config.get("format", "text")
    seed = args.seed if args.seed is not None else config.get("seed", 0)
    jobs = args.jobs if args.jobs is not None else config.get("jobs", 1)
    if jobs < 1:
        raise CliError("--jobs must be a positive integer")
    return fmt, seed, jobs


def _parse_int_spec(text: str, what: str) -> tuple[int, ...]:
    """Accept '4', '2,3,4', and '1..20' range shorthand."""
    out: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        try:
            if ".." in piece:
                lo, hi = piece.split("..", 1)
                a, b = int(lo), int(hi)
                if b < a:
                    raise ValueError
                out.extend(range(a, b + 1))
            else:
                out.append(int(piece))
        except ValueError:
            raise CliError(f"cannot parse {what} {text!r}") from None
    if not out:
        raise CliError(f"empty {what}")
    return tuple(out)


def _split_kind(kind: str) -> tuple[str, int | None]:
    if kind == "sd":
        return "sd", None
    if kind.startswith("esd:"):
        tail = kind.split(":", 1)[1]
        try:
            r = int(tail)
        except ValueError:
            raise CliError(f"bad edgewise parameter in {kind!r}") from None
        if r < 1:
            raise CliError("edgewise parameter must be at least 1")
        return "esd", r
    raise CliError(f"unknown subdivision kind {kind!r} (use sd or esd:R)")


def _load_triangulation(path: str) -> Triangulation:
    """Read triangulation JSON; a bare complex is lifted to identity."""
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as err:
        raise CliError(f"cannot read input: {err}") from err
    except json.JSONDecodeError as err:
        raise CliError(f"input is not valid JSON: {err}") from err
    if isinstance(obj, dict) and "facets" in obj and "carrier" not in obj:
        return identity(complex_from_json(obj))
    return triangulation_from_json(obj)


def _emit_poly(f: Poly, fmt: str, key: str = "local_h") -> None:
    if fmt == "text":
        print(format_poly(f))
    elif fmt == "json":
        print(json.dumps({key: poly_to_json(f)}, sort_keys=True))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["power", "coefficient"])
        for k, c in enumerate(f):
            writer.writerow([k, c])
        sys.stdout.write(buf.getvalue())


def _render_grid(header: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        for row in rows:
            writer.writerow(row + [""] * (len(header) - len(row)))
        return buf.getvalue()
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for row in [header] + rows:
        cells = [cell.ljust(widths[i]) for i, cell in enumerate(row)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _table_data(which: int, n_max: int):
    if which == 1:
        header = [""] + [f"k={k}" for k in range(n_max + 1)]
        rows = [[f"n={n}"] + [format_poly(d_nk(n, k)) for k in range(n + 1)]
                for n in range(n_max + 1)]
    else:
        k = which - 1
        header = [""] + [f"j={j}" for j in range(n_max + 1)]
        rows = [[f"n={n}"] + [format_poly(d_nkj(n, k, j)) for j in range(n + 1)]
                for n in range(k, n_max + 1)]
    return header, rows


def cmd_tables(args, config: dict) -> int:
    fmt, _, _ = _resolve(args, config)
    if args.n > TABLES_N_CAP:
        raise CliError(f"tables are limited to n <= {TABLES_N_CAP}")
    if args.n < 0:
        raise CliError("n must be nonnegative")
    header, rows = _table_data(args.which, args.n)
    if fmt == "json":
        body = {
            "table": args.which,
            "n": args.n,
            "rows": [{"label": r[0], "cells": r[1:]} for r in rows],
        }
        print(json.dumps(body, sort_keys=True))
    else:
        sys.stdout.write(_render_grid(header, rows, fmt))
    return 0


def cmd_localh(args, config: dict) -> int:
    fmt, _, _ = _resolve(args, config)
    T = _load_triangulation(args.input)
    n = len(T.base.vertices)
    if args.emit_c:
        c = c_coefficients(T)
        body = {"n": c.n, "c": [[k, j, v] for k, j, v in c.entries()]}
        print(json.dumps(body, sort_keys=True))
        return 0
    if args.via_uniform:
        kind, r = _split_kind(args.via_uniform)
        F = f_triangle("barycentric", n) if kind == "sd" \
            else f_triangle("edgewise", n, r=r)
        ell = local_h_via_uniform(F, c_coefficients(T))
    else:
        ell = local_h(T)
    _emit_poly(ell, fmt)
    return 0


def cmd_subdivide(args, config: dict) -> int:
    _, seed, _ = _resolve(args, config)
    T = _load_triangulation(args.input)
    kind = args.kind
    if kind == "sd":
        out = barycentric(T)
    elif kind.startswith("esd:"):
        _, r = _split_kind(kind)
        out = edgewise(T, r)
    elif kind.startswith("stellar:"):
        try:
            g = tuple(int(v) for v in kind.split(":", 1)[1].split(","))
        except ValueError:
            raise CliError(f"bad stellar face in {kind!r}") from None
        out = stellar(T, g)
    elif kind.startswith("random:"):
        try:
            steps = int(kind.split(":", 1)[1])
        except ValueError:
            raise CliError(f"bad step count in {kind!r}") from None
        if len(T.total.facets) != 1:
            raise CliError("random refinement starts from the trivial "
                           "triangulation; input must be a single simplex")
        out = random_triangulation(T.base.vertices, steps, seed=seed)
    else:
        raise CliError(
            f"unknown kind {kind!r} (use sd, esd:R, stellar:V1,V2,..., random:STEPS)")
    print(json.dumps(triangulation_to_json(out), sort_keys=True))
    return 0


def cmd_interlace(args, config: dict) -> int:
    fmt, _, _ = _resolve(args, config)
    f = parse_poly(args.f)
    g = parse_poly(args.g)
    report = interlace_report(f, g)
    if fmt == "json":
        body = {
            "interlaces": report.ok,
            "reason": report.reason,
            "f_roots": report.f_isolation.pretty() if report.f_isolation else None,
            "g_roots": report.g_isolation.pretty() if report.g_isolation else None,
        }
        print(json.dumps(body, sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["interlaces", "reason"])
        writer.writerow([str(report.ok).lower(), report.reason])
        sys.stdout.write(buf.getvalue())
    else:
        print("true" if report.ok else "false")
        if args.explain:
            print(f"reason: {report.reason}")
            if report.f_isolation:
                print(f"roots of f: {report.f_isolation.pretty()}")
            if report.g_isolation:
                print(f"roots of g: {report.g_isolation.pretty()}")
    return 0 if report.ok else 1


def cmd_ftriangle(args, config: dict) -> int:
    fmt, _, _ = _resolve(args, config)
    if (args.input is None) == (args.kind is None):
        raise CliError("give exactly one of --input or --kind")
    if args.input:
        T = _load_triangulation(args.input)
        try:
            F = f_triangle_of(T)
        except NotUniformError as err:
            print(f"not uniform: {err}", file=sys.stderr)
            return 1
    else:
        if args.n is None:
            raise CliError("--kind needs --n")
        if args.kind == "trivial":
            F = f_triangle("trivial", args.n)
        else:
            kind, r = _split_kind(args.kind)
            F = f_triangle("barycentric", args.n) if kind == "sd" \
                else f_triangle("edgewise", args.n, r=r)
    if fmt == "json":
        print(json.dumps({"n": F.n, "rows": [list(r) for r in F.rows]},
                         sort_keys=True))
    else:
        header = [""] + [f"i={i}" for i in range(F.n + 1)]
        rows = [[f"j={j}"] + [str(c) for c in row] for j, row in enumerate(F.rows)]
        sys.stdout.write(_render_grid(header, rows, fmt))
    return 0


def cmd_stat_poly(args, config: dict) -> int:
    fmt, _, _ = _resolve(args, config)
    params = _parse_int_spec(args.params, "--params")
    family = args.family
    try:
        if family == "d" and len(params) == 2:
            poly, name = d_nk(*params), "d_{%d,%d}" % params
        elif family == "d" and len(params) == 3:
            poly, name = d_nkj(*params), "d_{%d,%d,%d}" % params
        elif family == "p" and len(params) == 2:
            poly, name = p_nk(*params), "p_{%d,%d}" % params
        elif family == "E" and len(params) == 2:
            poly, name = E_nr(*params), "E_{%d,%d}" % params
        else:
            raise CliError(f"family {family!r} takes "
                           f"{'2 or 3' if family == 'd' else '2'} parameters")
    except ValueError as err:
        raise CliError(str(err)) from err
    _emit_poly(poly, fmt, key=name)
    return 0


def _report_body(report) -> dict:
    return {
        "suite": report.suite,
        "cases_run": report.cases_run,
        "failures": [
            {"case": dict((k, v) for k, v in f.params), "detail": f.detail}
            for f in report.failures
        ],
    }


def cmd_verify(args, config: dict) -> int:
    fmt, _, jobs = _resolve(args, config)
    kwargs: dict = {"jobs": jobs}
    if args.n:
        ns = _parse_int_spec(args.n, "--n")
        kwargs["ns"] = ns
        kwargs["n_max"] = max(ns)
    if args.seeds:
        kwargs["seeds"] = _parse_int_spec(args.seeds, "--seeds")
    if args.steps is not None:
        if args.steps < 0:
            raise CliError("--steps must be nonnegative")
        kwargs["steps"] = args.steps
    if args.r:
        rs = _parse_int_spec(args.r, "--r")
        kwargs["rs"] = rs
        kwargs["r_max"] = max(rs)
    if args.kinds:
        kinds = tuple(k.strip() for k in args.kinds.split(","))
        for k in kinds:
            _split_kind(k)
        kwargs["kinds"] = kinds
    if args.k is not None:
        kwargs["k_max"] = args.k
    try:
        report = verify_mod.run_suite(args.suite, **kwargs)
    except ValueError as err:
        raise CliError(str(err)) from err
    if fmt == "json":
        print(json.dumps(_report_body(report), sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["case", "ok", "detail"])
        for case in report.cases:
            writer.writerow([case.label, str(case.ok).lower(), case.detail])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"suite {report.suite}: {report.cases_run} cases, "
              f"{len(report.failures)} failures")
        for case in report.cases:
            if not case.ok:
                print(f"  FAIL {case.label}: {case.detail}")
            elif args.verbose:
                print(f"  ok {case.label}: {case.detail}")
    print(f"# wall time: {report.seconds:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default from config, else text)")
    common.add_argument("--config", default=None, metavar="FILE",
                        help="JSON file pinning prng/max_enum_n and defaults "
                             "for format/seed/jobs")
    common.add_argument("--seed", type=int, default=None,
                        help="PRNG seed where randomness is involved")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes for verify suites")

    parser = argparse.ArgumentParser(
        prog="subdiv",
        description="Local h-polynomials of subdivided simplices: compute, "
                    "subdivide, and certify real-rootedness and interlacing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", parents=[common],
                       help="print the d-polynomial reference tables")
    p.add_argument("--which", type=int, choices=(1, 2, 3), required=True,
                   help="1: d_{n,k}; 2: d_{n,1,j}; 3: d_{n,2,j}")
    p.add_argument("--n", type=int, required=True, help="largest n row")
    p.set_defaults(handler=cmd_tables)

    p = sub.add_parser("localh", parents=[common],
                       help="local h-polynomial of a triangulation JSON file")
    p.add_argument("--input", required=True, metavar="FILE",
                   help="triangulation JSON (a bare complex is treated as "
                        "its identity triangulation)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--via-uniform", metavar="KIND", default=None,
                       help="print the local h of the sd or esd:R refinement "
                            "of the input, computed from its coefficient "
                            "matrix instead of the refined complex")
    group.add_argument("--emit-c", action="store_true",
                       help="print the coefficient matrix as JSON "
                            '{"n": n, "c": [[k, j, value], ...]}')
    p.set_defaults(handler=cmd_localh)

    p = sub.add_parser("subdivide", parents=[common],
                       help="apply a subdivision and print the result JSON")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--kind", required=True,
                   help="sd | esd:R | stellar:V1,V2,... | random:STEPS")
    p.set_defaults(handler=cmd_subdivide)

    p = sub.add_parser("interlace", parents=[common],
                       help="decide whether the first polynomial interlaces "
                            "the second; exit 1 when it does not")
    p.add_argument("f", help="polynomial, e.g. '1+4x+x^2'")
    p.add_argument("g", help="polynomial, e.g. 'x+4x^2+x^3'")
    p.add_argument("--explain", action="store_true",
                   help="also print root isolation intervals")
    p.set_defaults(handler=cmd_interlace)

    p = sub.add_parser("ftriangle", parents=[common],
                       help="face-count triangle of a uniform family or an "
                            "input triangulation")
    p.add_argument("--input", default=None, metavar="FILE")
    p.add_argument("--kind", default=None, help="trivial | sd | esd:R")
    p.add_argument("--n", type=int, default=None, help="vertex count with --kind")
    p.set_defaults(handler=cmd_ftriangle)

    p = sub.add_parser("stat-poly", parents=[common],
                       help="print one permutation-statistic polynomial")
    p.add_argument("--family", choices=("d", "p", "E"), required=True)
    p.add_argument("--params", required=True,
                   help="comma-separated indices: d takes n,k or n,k,j; "
                        "p takes n,k; E takes n,r")
    p.set_defaults(handler=cmd_stat_poly)

    p = sub.add_parser("verify", parents=[common],
                       help="run one verification suite")
    p.add_argument("suite", choices=verify_mod.SUITE_NAMES)
    p.add_argument("--n", default=None,
                   help="n values, e.g. '4' or '2,3,4' or '2..4'")
    p.add_argument("--seeds", default=None, help="seed list, e.g. '1..20'")
    p.add_argument("--steps", type=int, default=None,
                   help="cap on random refinement steps (step count is "
                        "seed mod cap+1)")
    p.add_argument("--r", default=None, help="edgewise parameters, e.g. '2,3'")
    p.add_argument("--kinds", default=None,
                   help="refinement kinds, e.g. 'sd,esd:2,esd:3'")
    p.add_argument("--k", type=int, default=None,
                   help="iteration cap for suites that iterate")
    p.add_argument("--verbose", action="store_true",
                   help="print passing cases too (text format)")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        return args.handler(args, config)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except SchemaError as err:
        print(f"error at {err.path or '<root>'}: {err.message}", file=sys.stderr)
        return 2
    except (PolyParseError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
