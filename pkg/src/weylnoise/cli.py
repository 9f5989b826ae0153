"""Command line entry point for the verification suites."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, load_config_file, merge_config
from .report import emit_report, report_to_dict, run_suites
from .suites import SUITE_NAMES

__all__ = ["build_parser", "main"]

# flag dest -> SuiteConfig field; every entry defaults to None (not given)
_FLAG_FIELDS = (
    "seed",
    "grid_radial",
    "grid_angular",
    "fock_modes",
    "fock_cutoff",
    "slots",
    "density",
    "tol_exact",
    "tol_quadrature",
)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="verify",
        description=(
            "Run the verification suites over the spinor-bundle and "
            "Fock-space construction and emit a report. Exit code 0 means "
            "every check passed, 1 means at least one failed, 2 means the "
            "configuration was invalid."
        ),
    )
    p.add_argument("--config", metavar="PATH", help="key = value config file")
    p.add_argument(
        "--suite",
        action="append",
        metavar="NAME",
        help=f"suite to run, repeatable; default all of: {', '.join(SUITE_NAMES)}",
    )
    p.add_argument("--seed", type=int, help="rng seed shared by all suites")
    p.add_argument("--grid-radial", type=int, dest="grid_radial", metavar="INT")
    p.add_argument("--grid-angular", type=int, dest="grid_angular", metavar="INT")
    p.add_argument(
        "--fock-n",
        type=int,
        dest="fock_modes",
        metavar="INT",
        help="number of oscillator modes",
    )
    p.add_argument(
        "--fock-N",
        type=int,
        dest="fock_cutoff",
        metavar="INT",
        help="total occupation cutoff",
    )
    p.add_argument("--slots", type=int, metavar="INT", help="fermionic toy slots")
    p.add_argument(
        "--density",
        choices=("standard", "printed", "both"),
        help="orbit measure density; 'both' checks the two candidates side by side",
    )
    p.add_argument("--tol-exact", type=float, dest="tol_exact", metavar="FLOAT")
    p.add_argument("--tol-quad", type=float, dest="tol_quadrature", metavar="FLOAT")
    p.add_argument("--output", choices=("json", "text"), default="text")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        file_values = load_config_file(args.config) if args.config else None
    except OSError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        print(f"config error in {args.config}: {exc}", file=sys.stderr)
        return 2
    overrides = {name: getattr(args, name) for name in _FLAG_FIELDS}
    if args.suite:
        overrides["suites"] = ",".join(args.suite)
    try:
        config = merge_config(file_values, overrides)
        reports = run_suites(config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    payload = emit_report(report_to_dict(reports, config), args.output)
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)
    return 0 if report_failed(reports) == 0 else 1


def report_failed(reports) -> int:
    return sum(
        1 for rep in reports for c in rep.checks if c.status != "pass"
    )


if __name__ == "__main__":
    sys.exit(main())
