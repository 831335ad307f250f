#!/usr/bin/env python3
"""Hunt star-5-critical subcubic graphs and audit each find.

Every enumerated connected graph is tested for vertex-deletion
criticality; each critical graph then gets the full structural
predicate audit and a discharging run on its pruned form.  A predicate
failure on a genuine critical graph would contradict the structure
theory this package encodes, so it exits nonzero.

    python3 scripts/hunt_critical.py --max-n 8 --mode multigraph
"""

import argparse
import sys
import time
from dataclasses import dataclass

from starline import find_critical
from starline.atlas import MODES


@dataclass(frozen=True)
class HuntConfig:
    max_n: int
    mode: str
    k: int


def parse_config(argv: list[str] | None = None) -> HuntConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--mode", choices=MODES, default="simple")
    parser.add_argument("--k", type=int, default=5)
    args = parser.parse_args(argv)
    return HuntConfig(args.max_n, args.mode, args.k)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_config(argv)
    start = time.perf_counter()
    findings = find_critical(cfg.max_n, cfg.mode, k=cfg.k)
    elapsed = time.perf_counter() - start
    clean = True
    for i, f in enumerate(findings):
        edges = " ".join(f"{u}-{v}" for u, v in f.graph.edges)
        simple = "simple" if f.graph.is_simple else "parallel edges"
        print(f"[{i}] n={f.graph.n} m={f.graph.m} ({simple}) edges: {edges}")
        print(f"    deletion chi_s: {' '.join(map(str, f.criticality.deletion_chi))}")
        if f.lemmas.all_pass:
            print("    lemma audit: all predicates pass")
        else:
            clean = False
            for check in f.lemmas.failures():
                print(f"    lemma audit FAIL {check.name}: witnesses {check.witnesses}")
        pools = ", ".join(
            f"{'+'.join(map(str, p.members))}={p.total}" for p in f.charge.pools
        )
        print(
            f"    charges: total {f.charge.total}, "
            f"{'nonnegative' if f.charge.all_nonnegative else 'NEGATIVE'}"
            + (f", pools {pools}" if pools else "")
        )
    print(
        f"{len(findings)} star-{cfg.k}-critical graphs "
        f"({cfg.mode}, n <= {cfg.max_n}) in {elapsed:.1f} s"
    )
    return 0 if clean else 1


if __name__ == "__main__":
    sys.exit(main())
