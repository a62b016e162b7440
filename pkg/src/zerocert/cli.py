"""``zerocert count --spec PATH --accuracy N0 ...``

Exit codes: 0 Certified, 2 Inconclusive, 1 malformed spec or arguments.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .certifier import CertifierConfig, Outcome, ZeroReport, certify
from .report import to_csv, to_json, to_text
from .specfile import SpecError, validate_spec

EXIT_CODES = {Outcome.CERTIFIED: 0, Outcome.INCONCLUSIVE: 2}
EXIT_SPEC_ERROR = 1
FORMATS = ("json", "text", "csv-boxes")
PRECISION_ENV = "ZEROCERT_PRECISION"


@dataclass(frozen=True)
class RunSpec:
    spec: Path
    n0: int
    restart_budget: int
    depth_budget: int
    threads: int
    format: str
    precision: int | None

    def config(self) -> CertifierConfig:
        return CertifierConfig(
            n0=self.n0,
            restart_budget=self.restart_budget,
            depth_budget=self.depth_budget,
            threads=self.threads,
            precision=self.precision,
        )


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zerocert", description="Certified zero counting on [-1, 1]^d.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("count", help="count and localise the zeros of a function spec")
    c.add_argument("--spec", required=True, type=Path, help="function spec JSON file")
    c.add_argument("--accuracy", required=True, type=_positive, metavar="N0", help="accuracy n0 >= 1")
    c.add_argument("--restart-budget", type=_positive, default=CertifierConfig.restart_budget)
    c.add_argument("--depth-budget", type=_positive, default=CertifierConfig.depth_budget)
    c.add_argument("--threads", type=_positive, default=1)
    c.add_argument("--format", choices=FORMATS, default="json")
    return p


def _precision_from_env() -> int | None:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None or raw.strip() == "":
        return None
    try:
        p = int(raw)
    except ValueError:
        raise SpecError(PRECISION_ENV, f"expected a positive integer, got {raw!r}") from None
    if p < 1:
        raise SpecError(PRECISION_ENV, "must be positive")
    return p


def parse_args(argv) -> RunSpec:
    a = build_parser().parse_args(argv)
    return RunSpec(a.spec, a.accuracy, a.restart_budget, a.depth_budget, a.threads, a.format, _precision_from_env())


def render(report: ZeroReport, fmt: str, wall_time: float | None = None) -> str:
    if fmt == "json":
        return to_json(report, wall_time) + "\n"
    if fmt == "csv-boxes":
        return to_csv(report)
    return to_text(report, wall_time)


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        rs = parse_args(argv)
    except SystemExit as e:
        return EXIT_SPEC_ERROR if e.code else 0
    except SpecError as e:
        print(f"zerocert: error: {e}", file=err)
        return EXIT_SPEC_ERROR
    try:
        f = validate_spec(rs.spec)
        cfg = rs.config()
    except (SpecError, ValueError) as e:
        print(f"zerocert: error: {e}", file=err)
        return EXIT_SPEC_ERROR
    start = time.perf_counter()
    report = certify(f, cfg)
    elapsed = time.perf_counter() - start
    out.write(render(report, rs.format, elapsed))
    return EXIT_CODES[report.outcome]


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
