"""Suite orchestration and report assembly.

A report is a plain dict: version, config echo, oracle-determined constants,
one entry per executed suite with its check rows sorted by check id, and a
pass/fail summary. The JSON emission is deterministic for a fixed config and
seed once timing fields are excluded, which is part of the shipped contract
and is tested as such.
"""

from __future__ import annotations

import dataclasses
import json
import math
import time

from .config import ConfigError, SuiteConfig
from .suites import CheckResult, SUITE_NAMES, run_suite

__all__ = [
    "REPORT_VERSION",
    "SuiteReport",
    "run_suites",
    "report_to_dict",
    "emit_report",
]

REPORT_VERSION = "0.1.0"

# discrepancies must stay JSON-representable; an exploding check is recorded
# at this finite sentinel instead of inf/nan
_DISCREPANCY_CLAMP = 1e30


@dataclasses.dataclass(frozen=True)
class SuiteReport:
    name: str
    checks: tuple[CheckResult, ...]
    constants: dict
    runtime_ms: float


def run_suites(config: SuiteConfig) -> list[SuiteReport]:
    """Execute the suites selected by the config, in registry order.

    Unknown suite names are a config error. Check failures are recorded in
    the rows, never raised.
    """
    requested = config.selected_suites()
    unknown = sorted(set(requested) - set(SUITE_NAMES))
    if unknown:
        raise ConfigError(
            f"unknown suite name(s) {', '.join(unknown)}; "
            f"known suites: {', '.join(SUITE_NAMES)}"
        )
    wanted = set(requested) if requested else set(SUITE_NAMES)
    reports = []
    for name in SUITE_NAMES:
        if name not in wanted:
            continue
        start = time.perf_counter()
        ctx = run_suite(name, config)
        elapsed = (time.perf_counter() - start) * 1000.0
        reports.append(
            SuiteReport(
                name=name,
                checks=tuple(ctx.results),
                constants=dict(ctx.constants),
                runtime_ms=elapsed,
            )
        )
    return reports


def _finite(value: float) -> float:
    if math.isfinite(value):
        return float(value)
    return _DISCREPANCY_CLAMP


def report_to_dict(
    reports: list[SuiteReport],
    config: SuiteConfig,
    include_timing: bool = True,
) -> dict:
    suites = []
    total = passed = 0
    for rep in reports:
        rows = []
        for c in sorted(rep.checks, key=lambda c: c.check_id):
            row = {
                "check_id": c.check_id,
                "anchor": c.anchor,
                "status": c.status,
                "discrepancy": _finite(c.discrepancy),
                "tolerance": c.tolerance,
                "comparison": c.comparison,
            }
            if include_timing:
                row["runtime_ms"] = round(c.runtime_ms, 3)
            rows.append(row)
            total += 1
            passed += c.status == "pass"
        entry: dict = {"name": rep.name, "checks": rows}
        if include_timing:
            entry["runtime_ms"] = round(rep.runtime_ms, 3)
        suites.append(entry)
    constants = {rep.name: rep.constants for rep in reports if rep.constants}
    return {
        "version": REPORT_VERSION,
        "config": dataclasses.asdict(config),
        "constants": constants,
        "suites": suites,
        "summary": {
            "total": total,
            "passed": passed,
            "failed": total - passed,
        },
    }


def emit_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if fmt != "text":
        raise ConfigError(f"unknown output format {fmt!r}")
    lines = [f"verification report, version {report['version']}"]
    cfg = report["config"]
    lines.append(
        "seed {seed}, density {density}, grid {grid_radial}x{grid_angular}, "
        "fock n={fock_modes} N={fock_cutoff}, slots={slots}".format(**cfg)
    )
    for suite in report["suites"]:
        timing = (
            f"  ({suite['runtime_ms']:.0f} ms)" if "runtime_ms" in suite else ""
        )
        lines.append(f"\n{suite['name']}{timing}")
        for row in suite["checks"]:
            bound = "<=" if row["comparison"] == "max" else ">="
            lines.append(
                "  {status:4s}  {check_id:28s}  {discrepancy:11.4e} {bound} {tolerance:.1e}".format(
                    bound=bound, **row
                )
            )
    s = report["summary"]
    lines.append(
        f"\nsummary: {s['total']} checks, {s['passed']} passed, {s['failed']} failed"
    )
    return "\n".join(lines) + "\n"
