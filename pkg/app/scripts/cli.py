from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from app.api.schemas import BoundsRecord, SampleConfig, SweepGrid
from app.core.config import get_settings
from app.core.enums import VerifyTarget
from app.core.errors import DomainError, NotCoveredError
from app.core.types import BoundPair, ExponentTriple, QuadExponents, RQPoint
from app.services import bounds, regions, suites, sweep

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_COVERED = 2
EXIT_VIOLATIONS = 3


def _record(case: str, pair: BoundPair) -> BoundsRecord:
    return BoundsRecord(
        case=case,
        lower=pair.lower,
        upper=pair.upper,
        lower_strict=pair.lower_strict,
        upper_strict=pair.upper_strict,
        sharp=pair.sharp,
    )


def cmd_bounds(args: argparse.Namespace) -> int:
    try:
        if args.r is not None:
            quad = QuadExponents(args.r, args.s, args.t, args.p)
        else:
            params = ExponentTriple(args.s, args.t, args.p)
    except DomainError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.r is not None:
        pair = bounds.theorem33_bounds(quad)
        case = "thm33"
    else:
        pair = bounds.theorem31_bounds(params)
        case = regions.theorem31_case(params).case.value
    print(_record(case, pair).to_line())
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    if args.aq is not None:
        print(regions.aq_threshold(args.aq).describe())
        return EXIT_OK
    point = RQPoint(args.r, args.q)
    match = regions.match_g(point) if args.function == "g" else regions.match_f(point)
    print(f"{match.tag.value} rule={match.rule}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = SampleConfig.from_settings(
        seed=args.seed,
        n_samples=args.samples,
        tolerance=args.tol,
        workers=args.workers,
        x_min=args.x_min,
        x_max=args.x_max,
    )
    result = suites.run_target(VerifyTarget(args.target), cfg)
    for report in result.reports:
        for line in report.to_lines():
            print(line)
        print()
    print(f"suite={result.target.value} reports={len(result.reports)} violations={result.violations}")
    return EXIT_OK if result.ok else EXIT_VIOLATIONS


def cmd_sweep(args: argparse.Namespace) -> int:
    grid = SweepGrid(
        r_range=(args.r_min, args.r_max, args.r_steps),
        q_range=(args.q_min, args.q_max, args.q_steps),
        output_path=args.output,
    )
    try:
        path = sweep.write_sweep(grid)
    except OSError as exc:
        print(f"cannot write {grid.output_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(prog="meanbounds", description="Bounds for ratios of differences of power means")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    bounds_cmd = commands.add_parser("bounds", help="bounds of a ratio of mean differences")
    bounds_cmd.add_argument("--s", type=float, required=True)
    bounds_cmd.add_argument("--t", type=float, required=True)
    bounds_cmd.add_argument("--p", type=float, required=True)
    bounds_cmd.add_argument("--r", type=float, default=None, help="use (M_r^p - M_s^p)/(M_t^p - M_s^p)")
    bounds_cmd.set_defaults(handler=cmd_bounds)

    classify_cmd = commands.add_parser("classify", help="monotonicity class of G_{r,q} or F_{r,q}, or the set A_q")
    classify_cmd.add_argument("--r", type=float)
    classify_cmd.add_argument("--q", type=float)
    classify_cmd.add_argument("--function", choices=("g", "f"), default="g")
    classify_cmd.add_argument("--aq", type=float, default=None, metavar="Q")
    classify_cmd.set_defaults(handler=cmd_classify)

    verify_cmd = commands.add_parser("verify", help="run a numerical verification suite")
    verify_cmd.add_argument("--target", required=True, choices=[target.value for target in VerifyTarget])
    verify_cmd.add_argument("--seed", type=int, default=settings.seed)
    verify_cmd.add_argument("--samples", type=int, default=settings.n_samples)
    verify_cmd.add_argument("--tol", type=float, default=settings.tolerance)
    verify_cmd.add_argument("--workers", type=int, default=settings.workers)
    verify_cmd.add_argument("--x-min", dest="x_min", type=float, default=settings.x_min)
    verify_cmd.add_argument("--x-max", dest="x_max", type=float, default=settings.x_max)
    verify_cmd.set_defaults(handler=cmd_verify)

    sweep_cmd = commands.add_parser("sweep", help="write the (r, q) monotonicity grid as CSV")
    sweep_cmd.add_argument("--output", type=Path, required=True)
    sweep_cmd.add_argument("--r-min", dest="r_min", type=float, default=-2.0)
    sweep_cmd.add_argument("--r-max", dest="r_max", type=float, default=3.0)
    sweep_cmd.add_argument("--r-steps", dest="r_steps", type=int, default=51)
    sweep_cmd.add_argument("--q-min", dest="q_min", type=float, default=-2.0)
    sweep_cmd.add_argument("--q-max", dest="q_max", type=float, default=3.0)
    sweep_cmd.add_argument("--q-steps", dest="q_steps", type=int, default=51)
    sweep_cmd.set_defaults(handler=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.command == "classify" and args.aq is None and (args.r is None or args.q is None):
        print("classify needs --r and --q, or --aq", file=sys.stderr)
        return EXIT_USAGE

    level = logging.DEBUG if args.verbose else get_settings().log_level
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s %(message)s")

    try:
        return args.handler(args)
    except NotCoveredError as exc:
        print(str(exc))
        return EXIT_NOT_COVERED
    except DomainError as exc:
        print(f"excluded parameters: {exc}", file=sys.stderr)
        return EXIT_NOT_COVERED
    except ValidationError as exc:
        print(f"invalid options: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
