#!/usr/bin/env python3
"""Exhaustive solve-and-check runs over the subcubic catalogue.

Enumerates every connected subcubic (multi)graph up to the requested
order, solves each one exactly (star chromatic index plus maximum
average degree), verifies every certificate, and evaluates the bound
checks.  Results are cached, so repeated runs only pay for new graphs.

Typical session:

    python3 scripts/run_sweeps.py --max-n 9 --cache results/simple.cache
    python3 scripts/run_sweeps.py --max-n 7 --mode multigraph --jobs 4
"""

import argparse
import os
import sys
import time
from dataclasses import dataclass

from starline import summary_text, sweep
from starline.atlas import CHECKS, MODES, SIMPLE_MAX_N


@dataclass(frozen=True)
class SweepConfig:
    max_n: int
    mode: str
    checks: tuple[str, ...]
    cache: str | None
    jobs: int


def parse_config(argv: list[str] | None = None) -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=SIMPLE_MAX_N - 2)
    parser.add_argument("--mode", choices=MODES, default="simple")
    parser.add_argument(
        "--check",
        default=",".join(CHECKS),
        help=f"comma-separated subset of: {','.join(CHECKS)}",
    )
    parser.add_argument(
        "--cache",
        default=os.environ.get("STARLINE_CACHE"),
        help="append-only result cache (default: $STARLINE_CACHE)",
    )
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args(argv)
    checks = tuple(name.strip() for name in args.check.split(",") if name.strip())
    return SweepConfig(args.max_n, args.mode, checks, args.cache, args.jobs)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_config(argv)
    start = time.perf_counter()
    summary = sweep(cfg.max_n, cfg.mode, checks=cfg.checks, cache=cfg.cache, jobs=cfg.jobs)
    elapsed = time.perf_counter() - start
    for warning in summary.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    print(summary_text(summary))
    print(
        f"cache: {summary.cache_hits} hits, {summary.cache_misses} misses; "
        f"{elapsed:.1f} s"
    )
    asserted = sum(
        len(c.counterexamples) for c in summary.checks if c.name != "conj6"
    )
    return 1 if asserted else 0


if __name__ == "__main__":
    sys.exit(main())
