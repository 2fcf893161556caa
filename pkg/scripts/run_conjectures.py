#!/usr/bin/env python3
"""Randomized conjecture campaign; JSON-lines reports plus a summary line.

A "violated" verdict would be a research finding: rerun it through
hamtg.lab.replay_report to confirm, then keep the line.
"""

import argparse
import sys

from hamtg.lab import run_campaign


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--trials", type=int, required=True)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--conjecture", type=int, choices=(1, 2), default=None)
    parser.add_argument("--orders", type=int, default=1)
    parser.add_argument("--basis-seed", type=int, default=None)
    parser.add_argument("--out", default=None)
    parser.add_argument("--cache-dir", default=None)
    args = parser.parse_args()

    conjectures = (args.conjecture,) if args.conjecture else (1, 2)
    sink = open(args.out, "a") if args.out else sys.stdout
    try:
        out = run_campaign(
            args.n,
            args.trials,
            args.seed,
            conjectures=conjectures,
            orders=args.orders,
            basis_seed=args.basis_seed,
            cache_dir=args.cache_dir,
            sink=sink,
        )
    finally:
        if args.out:
            sink.close()
    print(f"counts: {out['summary']['counts']}", file=sys.stderr)


if __name__ == "__main__":
    main()
