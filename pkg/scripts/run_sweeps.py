"""Run the exhaustive and seeded-random sweeps and write one CSV per run.

    python3 scripts/run_sweeps.py --out results/
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from grw.sweep import SweepConfig, run_sweep, to_csv

RUNS = [
    ("exhaustive_q2_m2_n2", SweepConfig(q=2, m=2, n=2)),
    ("exhaustive_q2_m2_n3", SweepConfig(q=2, m=2, n=3)),
    ("exhaustive_q2_m3_n2", SweepConfig(q=2, m=3, n=2)),
    ("exhaustive_q2_m3_n3", SweepConfig(q=2, m=3, n=3)),
    ("random_q2_m4_n4", SweepConfig(q=2, m=4, n=4, mode="random", count=67, seed=7)),
    ("random_q3_m2_n2", SweepConfig(q=3, m=2, n=2, mode="random", count=67, seed=7)),
    ("random_q2_m4_n3", SweepConfig(q=2, m=4, n=3, mode="random", count=66, seed=7)),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--only", help="substring filter on run names")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name, cfg in RUNS:
        if args.only and args.only not in name:
            continue
        t0 = time.perf_counter()
        res = run_sweep(cfg)
        (args.out / f"{name}.csv").write_text(to_csv(res))
        failed += res.failures
        print(f"{name:<22} {len(res.rows):>4} codes  {time.perf_counter() - t0:6.1f}s  {res.summary()}")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
