"""Command-line interface.

    psuinv compute lens --n 2 --r 5 --b 2 [--closed]
    psuinv compute series --n 2 --r 5 --framings 2,3 --order 4
    psuinv verify --suite congruence --n 2 --r 7 11 --framings 2 --framings=3,-2 [--json PATH]

Exit status: 0 when everything passes, 1 when a verification record fails,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .characters import CharacterContext
from .invariants import SurgeryPresentation, tau_r_lens_closed, tau_r_surgery, tau_series_surgery
from .rootsys import DEFAULT_CAP, build_root_system
from .verify import ALL_SUITES, SuiteConfig, run_suite


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _flatten(groups) -> list[int]:
    return [x for g in groups or [] for x in g]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="psuinv", description="Quantum PSU(n) invariants of lens spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="evaluate an invariant")
    csub = compute.add_subparsers(dest="what", required=True)

    lens = csub.add_parser("lens", help="tau_r of the lens space M(b)")
    lens.add_argument("--n", type=int, required=True)
    lens.add_argument("--r", type=int, required=True)
    lens.add_argument("--b", type=int, required=True)
    lens.add_argument("--closed", action="store_true", help="use the closed formula instead of the box sums")
    lens.add_argument("--cap", type=int, default=DEFAULT_CAP)

    series = csub.add_parser("series", help="perturbative series of a connected sum of lens spaces")
    series.add_argument("--n", type=int, required=True)
    series.add_argument("--r", type=int, required=True)
    series.add_argument("--framings", type=_int_list, required=True, help="comma-separated, e.g. 2,3 or =-2,3")
    series.add_argument("--order", type=int, required=True)

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", choices=ALL_SUITES, required=True)
    verify.add_argument("--n", type=_int_list, nargs="+", default=[])
    verify.add_argument("--r", type=_int_list, nargs="+", default=[])
    verify.add_argument(
        "--framings",
        type=_int_list,
        action="append",
        default=[],
        help="one framing list per flag; write --framings=-2,3 when the list starts with a minus sign",
    )
    verify.add_argument("--b", type=_int_list, nargs="+", default=None, help="framings for single-unknot checks")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--cap", type=int, default=DEFAULT_CAP)
    verify.add_argument("--order", type=int, default=None)
    verify.add_argument("--samples", type=int, default=20)
    verify.add_argument("--json", dest="json_path", default=None, help="write the report here ('-' for stdout)")
    verify.add_argument("--timings", action="store_true", help="include per-record runtimes in the report")
    return parser


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _compute_lens(args) -> int:
    ctx = CharacterContext(build_root_system(args.n), args.r, args.cap)
    if args.closed:
        value = tau_r_lens_closed(ctx, args.b)
    else:
        value = tau_r_surgery(ctx, SurgeryPresentation((args.b,)))
    _emit({"n": args.n, "r": args.r, "b": args.b, "method": "closed" if args.closed else "surgery", "tau_r": value.to_json()})
    return 0


def _compute_series(args) -> int:
    ctx = CharacterContext(build_root_system(args.n), args.r)
    value = tau_series_surgery(ctx, SurgeryPresentation(tuple(args.framings)), args.order)
    _emit({"n": args.n, "r": args.r, "framings": args.framings, "series": value.to_json()})
    return 0


def _verify(args) -> int:
    cfg = SuiteConfig(
        suite=args.suite,
        n_values=tuple(_flatten(args.n)),
        r_values=tuple(_flatten(args.r)),
        framings=tuple(tuple(f) for f in args.framings),
        order=args.order,
        seed=args.seed,
        cap=args.cap,
        b_values=None if args.b is None else tuple(_flatten(args.b)),
        samples=args.samples,
    )
    report = run_suite(cfg)
    text = report.dumps(timings=args.timings)
    if args.json_path == "-":
        sys.stdout.write(text)
    elif args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    s = report.summary
    print(f"{cfg.suite}: {s['total']} checks, {s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped", file=sys.stderr)
    for rec in report.failures():
        print(f"FAIL {rec.suite}/{rec.check} {json.dumps(rec.to_json()['params'])} {rec.detail or ''}", file=sys.stderr)
    return 0 if report.ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return _compute_lens(args) if args.what == "lens" else _compute_series(args)
        return _verify(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
