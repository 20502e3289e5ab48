"""Command-line front end: counts, identity verification sweeps, the
polynomiality probe, and the full self-test.

Region specs are given as key=value tokens (`n=15 m=5 k=2,5,7 x=0`); grids
as comparisons (`--grid "n<=4 m<=2 l<=1"` or `"n in {2,4} x in {1,3}"`).
Exact integers are serialized as decimal strings in JSON output.  Exit
status is 0 when every checked identity holds, 1 otherwise.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
import time

from . import paths, tiler, verify
from .regions import RegionSpec, build_region, left_half_free, lower_half_weighted

GRID_TOKEN = re.compile(r"(\w+)\s*(<=|=|in)\s*(\{[^{}]*\}|\S+)")

_GRID_KEYS = {"n": "n_values", "m": "m_values", "l": "l_values", "x": "x_values"}
_GRID_MINIMUM = {"n": 1, "m": 1, "l": 0, "x": 0}


def parse_grid(text: str) -> dict:
    """Grid bounds like 'n<=4 m<=2 l<=1' or 'n in {2,4} x in {1,3}'."""
    bounds: dict = {}
    consumed = 0
    for match in GRID_TOKEN.finditer(text):
        var, op, value = match.groups()
        consumed += len(match.group(0).replace(" ", ""))
        if var not in _GRID_KEYS:
            raise ValueError(f"unknown grid variable {var!r}")
        if op == "<=":
            values = range(_GRID_MINIMUM[var], int(value) + 1)
        elif op == "=":
            values = (int(value),)
        else:
            inner = value.strip("{}")
            values = tuple(int(part) for part in inner.split(",") if part)
        bounds[_GRID_KEYS[var]] = tuple(values)
    if consumed != len(text.replace(" ", "")):
        raise ValueError(f"could not parse grid spec {text!r}")
    return bounds


def emit(records: list[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    elif fmt == "csv":
        if not records:
            return
        fields = list(records[0].keys())
        writer = csv.DictWriter(out, fieldnames=fields)
        writer.writeheader()
        for rec in records:
            writer.writerow(rec)
    elif fmt == "text":
        for rec in records:
            status = "ok" if rec.get("pass") else "FAIL"
            parts = [f"{k}={v}" for k, v in rec.items() if k != "pass"]
            out.write(f"[{status}] " + " ".join(parts) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _apply_cap_flags(args) -> None:
    if getattr(args, "enum_cap", None) is not None:
        os.environ["HEXHOLES_ENUM_CAP"] = str(args.enum_cap)
    if getattr(args, "dp_width_cap", None) is not None:
        os.environ["HEXHOLES_DP_WIDTH_CAP"] = str(args.dp_width_cap)


# ---------------------------------------------------------------------------
# count


def cmd_count(args) -> int:
    _apply_cap_flags(args)
    spec = RegionSpec.parse(" ".join(args.spec))
    region = build_region(spec)
    cls = args.cls
    crosscheck = "skipped"
    if cls == "full":
        value = tiler.count_plain(region)
        method = "profile-dp"
        if value <= args.crosscheck_limit:
            crosscheck = "ok" if tiler.count_via_enumeration(region) == value else "MISMATCH"
    elif cls in ("hsym", "vsym"):
        counter = tiler.count_hsym if cls == "hsym" else tiler.count_vsym
        plain = tiler.count_plain(region)
        small = plain <= args.crosscheck_limit
        value = counter(region, method="filter" if small else "half")
        method = "enumeration-filter" if small else "half-region profile-dp"
        if small:
            crosscheck = "ok" if counter(region, method="half") == value else "MISMATCH"
    elif cls == "free-left":
        value = tiler.count_free(left_half_free(region))
        method = "profile-dp"
        if not spec.central_x:
            crosscheck = (
                "ok" if paths.count_free_via_pfaffian(spec) == value else "MISMATCH"
            )
    elif cls == "weighted-lower":
        value = tiler.count_weighted2(lower_half_weighted(region))
        method = "profile-dp"
        if not spec.central_x:
            crosscheck = (
                "ok" if paths.count_weighted2_via_det(spec) == value else "MISMATCH"
            )
    else:
        raise ValueError(f"unknown class {cls!r}")
    rec = {
        "spec": spec.text(),
        "class": cls,
        "value": str(value),
        "method": method,
        "crosscheck": crosscheck,
        "pass": crosscheck != "MISMATCH",
    }
    emit([rec], args.format)
    return 0 if rec["pass"] else 1


# ---------------------------------------------------------------------------
# verify / polycheck / selftest


def cmd_verify(args) -> int:
    _apply_cap_flags(args)
    grid = parse_grid(" ".join(args.grid)) if args.grid else None
    names = list(verify.SUITE_NAMES) if args.target == "all" else [args.target]
    failures = 0
    for name in names:
        records = verify.run_suite(name, grid=grid, trials=args.trials, seed=args.seed)
        failures += sum(1 for rec in records if not rec["pass"])
        emit(records, args.format)
    return 1 if failures else 0


def cmd_polycheck(args) -> int:
    _apply_cap_flags(args)
    spec = RegionSpec.parse(" ".join(args.spec))
    if spec.holes or spec.central_x:
        raise SystemExit("polycheck takes a plain hexagon spec (n=.. m=..)")
    profile = verify.polynomial_profile(spec.n, spec.m, args.xmax)
    emit(
        [
            {
                "spec": f"n={spec.n} m={spec.m}",
                "identity": "polynomial-in-x",
                "values": ",".join(profile["values"]),
                "vanish_order": profile["vanish_order"],
                "pass": profile["pass"],
            }
        ],
        args.format,
    )
    return 0 if profile["pass"] else 1


def cmd_selftest(args) -> int:
    _apply_cap_flags(args)
    failures = 0
    for name in verify.SUITE_NAMES:
        started = time.time()
        records = verify.run_suite(name, trials=args.trials, seed=args.seed)
        bad = sum(1 for rec in records if not rec["pass"])
        failures += bad
        status = "PASS" if bad == 0 else f"FAIL({bad})"
        print(
            f"{name:24s} {status:9s} {len(records):4d} checks  {time.time() - started:6.2f}s"
        )
    print("selftest:", "PASS" if failures == 0 else f"FAIL ({failures} checks)")
    return 1 if failures else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexholes",
        description="Exact tiling counts and identity verification for holey hexagons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--seed", type=int, default=7)
        p.add_argument("--trials", type=int, default=int(os.environ.get("HEXHOLES_TRIALS", 200)))
        p.add_argument("--enum-cap", type=int, default=None)
        p.add_argument("--dp-width-cap", type=int, default=None)

    p = sub.add_parser("count", help="count tilings of one region")
    p.add_argument("spec", nargs="+", help="region spec tokens, e.g. n=2 m=1 k=1")
    p.add_argument(
        "--class",
        dest="cls",
        choices=("full", "hsym", "vsym", "free-left", "weighted-lower"),
        default="full",
    )
    p.add_argument("--crosscheck-limit", type=int, default=50_000)
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run one identity suite over a grid")
    p.add_argument("target", choices=verify.SUITE_NAMES + ("all",))
    p.add_argument("--grid", nargs="+", default=None, help='e.g. n<=4 m<=2 l<=1 or "n in {2,4}"')
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("polycheck", help="finite differences of the rhombus-hole counts")
    p.add_argument("spec", nargs="+", help="hexagon spec, e.g. n=2 m=1")
    p.add_argument("--xmax", type=int, default=6)
    common(p)
    p.set_defaults(func=cmd_polycheck)

    p = sub.add_parser("selftest", help="run every suite at default caps")
    common(p)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
