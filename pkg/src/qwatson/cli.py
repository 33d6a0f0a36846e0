"""Command-line front end: ``verify``, ``list`` and ``point``."""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import registry
from .harness import FAILING, STATUSES, PASS, compare_cell, run_grid
from .qalg import ParamPoint
from .registry import FAMILIES, SearPoint
from .sampler import DEFAULT_POOL, SampleConfig
from .scalar import fmt, parse

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_COLORS = {"PASS": "32", "FAIL": "31", "DISCREPANT": "35", "SKIP_CONSTRAINT": "33", "SKIP_POLE": "33"}


class UsageError(Exception):
    pass


def _paint(text: str, status: str, stream) -> str:
    if os.environ.get("NO_COLOR") is not None or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\033[{_COLORS.get(status, '0')}m{text}\033[0m"


def select(selector: str) -> list[str]:
    """Resolve a comma-separated mix of ids, family names and ``all``."""
    ids: list[str] = []
    known = {s.id for s in registry.roster()}
    for part in (x.strip() for x in selector.split(",")):
        if not part:
            continue
        if part == "all":
            found = sorted(known)
        elif part in FAMILIES:
            found = [s.id for s in registry.roster() if s.family == part]
        elif part in known:
            found = [part]
        else:
            raise UsageError(f"unknown identity or family {part!r}")
        ids.extend(i for i in found if i not in ids)
    if not ids:
        raise UsageError("empty identity selection")
    return sorted(ids)


def _pool(text: Optional[str]):
    if text is None:
        return DEFAULT_POOL
    try:
        return tuple(parse(x) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --pool: {exc}") from None


def _write(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    if args.n_min < 0 or args.n_max < args.n_min:
        raise UsageError("need 0 <= --n-min <= --n-max")
    if args.ell_max < 0 or args.m_max < 0:
        raise UsageError("--ell-max and --m-max must be nonnegative")
    if args.points < 1:
        raise UsageError("--points must be at least 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    ids = select(args.identity)
    try:
        cfg = SampleConfig(seed=args.seed, pool=_pool(args.pool))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    echo = {
        "identity": args.identity,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "ell_max": args.ell_max,
        "m_max": args.m_max,
        "points": args.points,
        "seed": args.seed,
        "pool": [fmt(x) for x in cfg.pool],
        "fail_fast": args.fail_fast,
    }
    report = run_grid(
        ids, range(args.n_min, args.n_max + 1), range(args.ell_max + 1), range(args.m_max + 1),
        args.points, cfg, parallelism=args.jobs, fail_fast=args.fail_fast, config_echo=echo,
    )
    if args.stable_output:
        report.stable()
    render = {"json": report.to_json, "csv": report.to_csv, "md": report.to_markdown}[args.format]
    _write(render(), args.out)
    tot = report.summary["total"]
    parts = [_paint(f"{s}={tot[s]}", s, sys.stderr) for s in STATUSES]
    print(f"{len(ids)} identities, {report.summary['records']} records: " + " ".join(parts), file=sys.stderr)
    for r in report.records:
        if r.status in FAILING:
            print(_paint(f"{r.status}", r.status, sys.stderr) + f" {r.identity_id} n={r.n} ell={r.ell} m={r.m} #{r.point_index}",
                  file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_list(args) -> int:
    for spec in registry.roster():
        print(f"{spec.id}\t{spec.family}\t{spec.constraint_summary()}\t{spec.paper_label}")
    return EXIT_OK


def _point_for(spec, args):
    try:
        rho = parse(args.rho)
        if spec.point_kind == "param":
            return ParamPoint(rho, parse(args.alpha), parse(args.gamma), args.n, args.ell, args.m)
        if args.values is None:
            raise UsageError(f"{spec.id} takes five free parameters: pass --values a,b,c,d,e")
        vals = [parse(x) for x in args.values.split(",")]
        if len(vals) != 5:
            raise UsageError("--values needs exactly five entries")
        return SearPoint(rho, *vals, n=args.n)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"bad point: {exc}") from None


def cmd_point(args) -> int:
    try:
        spec = registry.get(args.identity)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if min(args.n, args.ell, args.m) < 0:
        raise UsageError("--n, --ell and --m must be nonnegative")
    point = _point_for(spec, args)
    bad = spec.violations(point)
    if bad:
        print(f"{spec.id}: point violates side condition(s): {', '.join(bad)}", file=sys.stderr)
        return EXIT_USAGE
    rec = compare_cell(spec, point)
    if rec.status == "SKIP_POLE":
        print(f"{spec.id}: pole at this point: {rec.note}", file=sys.stderr)
        return EXIT_USAGE
    print(f"identity     {spec.id}")
    print(f"lhs          {fmt(rec.lhs)}")
    print(f"rhs_closed   {fmt(rec.rhs_closed)}")
    derived = "-" if rec.rhs_derived is None else fmt(rec.rhs_derived)
    print(f"rhs_derived  {derived}" + (f"  ({rec.note})" if rec.note else ""))
    print(f"lhs == rhs_closed    {rec.lhs == rec.rhs_closed}")
    if rec.rhs_derived is not None:
        print(f"rhs_derived == rhs_closed    {rec.rhs_derived == rec.rhs_closed}")
    print("status       " + _paint(rec.status, rec.status, sys.stdout))
    return EXIT_OK if rec.status == PASS else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qwatson", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the three-way check over a grid")
    v.add_argument("--identity", default="all", help="id, family, 'all', or a comma-separated mix")
    v.add_argument("--n-min", type=int, default=0)
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--ell-max", type=int, default=3)
    v.add_argument("--m-max", type=int, default=3)
    v.add_argument("--points", type=int, default=1, help="sample points per grid cell")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--pool", default=None, help="comma-separated p/q candidates for rho, alpha, gamma")
    v.add_argument("--format", choices=("json", "csv", "md"), default="json")
    v.add_argument("--out", default="-", help="output path, '-' for stdout")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--fail-fast", action="store_true")
    v.add_argument("--stable-output", action="store_true", help="zero timings for byte-identical reports")
    v.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list", help="print the identity roster")
    ls.set_defaults(func=cmd_list)

    p = sub.add_parser("point", help="evaluate one identity at an explicit point")
    p.add_argument("--identity", required=True)
    p.add_argument("--rho", required=True, help="square root of q, as p/q")
    p.add_argument("--alpha", default="2", help="square root of a")
    p.add_argument("--gamma", default="3", help="square root of c")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--values", default=None, help="a,b,c,d,e for the five-parameter transformations")
    p.set_defaults(func=cmd_point)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qwatson: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
