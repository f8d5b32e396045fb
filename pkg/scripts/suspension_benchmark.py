"""Time fast vs direct Sq^1 on the generator of H^(1+i)(susp^i RP^2) and write a CSV."""

import argparse
import logging
import sys

from cupsq.bench import run_suspension_benchmark, write_csv


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-susp", type=int, default=6)
    p.add_argument("--repeats", type=int, default=1000, help="repeats at i=0, halved per level")
    p.add_argument("--out", default="suspension_benchmark.csv")
    args = p.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    rows = run_suspension_benchmark(args.max_susp, args.repeats)
    with open(args.out, "w", newline="") as fh:
        write_csv(rows, fh)
    logging.info("speedups: %s", " ".join(f"{r.speedup:.1f}" for r in rows))
    return 0


if __name__ == "__main__":
    sys.exit(main())
