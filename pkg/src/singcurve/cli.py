"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.

CSV/TSV columns of `table`: n, count_Y, count_C, lower, upper, achieved[, direct].
CSV/TSV columns of `census`: t, N_t, closed_points, partition_ok[, mobius].
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .curve import CurveModel, count_points, extremality_of_C, zeta_numerator_from_counts
from .gf import DEFAULT_CAP
from .glue import SingularCurve, build_glued_curve, build_selective_glued_curve
from .intpoly import power_sums
from .verify import SUITES, census_rows
from .zeta import count_points_direct, count_points_singular, extremality_report, singular_factor


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _rows_out(rows: list[dict], fmt: str, header: list[str] | None = None, comments: list[str] = ()) -> str:
    if fmt == "json":
        return _dump(rows)
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    cols = header or list(rows[0])
    w = csv.DictWriter(buf, cols, delimiter="," if fmt == "csv" else "\t", lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _curve_from_args(args) -> CurveModel:
    if args.curve:
        return CurveModel.from_json(_load_json(args.curve))
    if args.p1:
        if args.p is None:
            raise UsageError("--p1 needs --p")
        return CurveModel.projective_line(args.p, args.e)
    raise UsageError("give --p1 --p P [--e E] or --curve FILE")


def _singular_from_file(path: str) -> SingularCurve:
    obj = _load_json(path)
    if "kind" in obj:
        return SingularCurve(CurveModel.from_json(obj))
    return SingularCurve.from_json(obj)


def cmd_construct(args) -> int:
    C = _curve_from_args(args)
    if args.select:
        try:
            ts = [int(t) for t in args.select.split(",")]
        except ValueError as exc:
            raise UsageError(f"--select expects a comma-separated list of ints, got {args.select!r}") from exc
        Y = build_selective_glued_curve(C, ts, args.cap)
    elif args.n is not None:
        if args.n < 2:
            raise UsageError("--n must be >= 2")
        Y = build_glued_curve(C, args.n, args.cap)
    else:
        raise UsageError("give --n or --select")
    print(_dump(Y.to_json()))
    return 0


def cmd_table(args) -> int:
    Y = _singular_from_file(args.file)
    rep = extremality_report(Y, args.nmax, cap=args.cap)
    failed = False
    if args.oracle:
        for row in rep["rows"]:
            row["direct"] = count_points_direct(Y, row["n"], args.cap)
            failed |= row["direct"] != row["count_Y"]
    if args.format == "json":
        print(_dump(rep))
    else:
        cols = ["n", "count_Y", "count_C", "lower", "upper", "achieved"] + (["direct"] if args.oracle else [])
        comments = [
            f"delta={rep['delta']}",
            f"arithmetic_genus={rep['arithmetic_genus']}",
            f"singular_factor={' '.join(map(str, rep['singular_factor']))}",
            f"all_minus_one={rep['all_minus_one']} all_plus_one={rep['all_plus_one']}",
        ]
        print(_rows_out(rep["rows"], args.format, cols, comments))
    return 1 if failed else 0


def cmd_zeta(args) -> int:
    Y = _singular_from_file(args.file)
    out = count_points_singular(Y, args.nmax, cap=args.cap).to_json()
    out["power_sums"] = power_sums(singular_factor(Y), args.nmax)
    C = Y.normalization
    tbl = count_points(C, max(C.genus, 1), args.cap)
    Z = zeta_numerator_from_counts(tbl, C.genus)
    out["numerator_C"] = list(Z.coeffs)
    out["extremality_C"] = extremality_of_C(Z, C.q).value
    print(_dump(out))
    return 0


def cmd_census(args) -> int:
    C = _curve_from_args(args)
    rows = census_rows(C, args.nmax, args.cap)
    print(_rows_out(rows, args.format))
    return 0 if all(r["partition_ok"] and r.get("mobius", r["closed_points"]) == r["closed_points"] for r in rows) else 1


def cmd_verify(args) -> int:
    name = args.suite
    if name == "oracle":
        cases = SUITES[name](args.p or 2, args.e, args.n or 3, args.nmax or 8, args.seeds or 10, args.seed, args.cap)
    elif name == "lemma-e0":
        cases = SUITES[name](args.seeds or 1000, args.seed)
    elif name == "weil":
        cases = SUITES[name](None, args.nmax or 6, args.cap)
    elif name == "genus":
        qs = ((args.p, args.e),) if args.p else ((2, 1), (3, 1), (2, 2), (5, 1))
        cases = SUITES[name](qs, args.n or 4, args.nmax or 8, args.cap)
    else:
        cases = SUITES[name](args.p or 2, args.e, args.n or 3, args.cap)
    if args.format == "json":
        print(_dump([{"case": c.name, "passed": c.passed, "detail": c.detail} for c in cases]))
    else:
        for c in cases:
            print(c.line())
    ok = sum(c.passed for c in cases)
    print(f"{name}: {ok}/{len(cases)} passed", file=sys.stderr)
    return 0 if ok == len(cases) else 1


def _common(formats=("json", "csv", "tsv"), default="json") -> argparse.ArgumentParser:
    # a fresh parent per subcommand: argparse shares parent actions, so
    # set_defaults on one subparser would leak into the others
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest field size to enumerate")
    common.add_argument("--format", choices=formats, default=default)
    return common


def build_parser() -> argparse.ArgumentParser:
    curve = argparse.ArgumentParser(add_help=False)
    curve.add_argument("--p1", action="store_true", help="normalization is the projective line")
    curve.add_argument("--curve", help="curve model JSON file")
    curve.add_argument("--p", type=int)
    curve.add_argument("--e", type=int, default=1)

    parser = argparse.ArgumentParser(prog="singcurve", description="Singular curves glued from Frobenius orbits.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[_common(), curve], help="build C_[q,n] or C_[q;t1,...,ts]")
    c.add_argument("--n", type=int)
    c.add_argument("--select", help="comma-separated gluing degrees, e.g. 2,3")
    c.set_defaults(func=cmd_construct)

    t = sub.add_parser("table", parents=[_common()], help="count/genus/zeta table of a glued curve")
    t.add_argument("file")
    t.add_argument("--nmax", type=int, default=4)
    t.add_argument("--oracle", action="store_true", help="add the direct gluing count column")
    t.set_defaults(func=cmd_table)

    z = sub.add_parser("zeta", parents=[_common()], help="zeta factors of a glued curve")
    z.add_argument("file")
    z.add_argument("--nmax", type=int, default=4)
    z.set_defaults(func=cmd_zeta)

    s = sub.add_parser("census", parents=[_common(), curve], help="closed points per degree")
    s.add_argument("--nmax", type=int, default=4)
    s.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", parents=[_common(("text", "json"), "text")], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--p", type=int)
    v.add_argument("--e", type=int, default=1)
    v.add_argument("--n", type=int)
    v.add_argument("--nmax", type=int)
    v.add_argument("--seeds", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "nmax", None) is not None and args.nmax < 1:
        parser.error("--nmax must be >= 1")
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
