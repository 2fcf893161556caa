#!/usr/bin/env python3
"""Measure span dimensions and the lift-basis size per order.

Writes results/dimensions.json (the repo's record of measured values).
"""

import argparse
import json
from pathlib import Path

from hamtg.lab import dimension_table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=6)
    parser.add_argument("--pair-max", type=int, default=6)
    parser.add_argument(
        "--out", default=str(Path(__file__).resolve().parent.parent / "results" / "dimensions.json")
    )
    args = parser.parse_args()

    rows = dimension_table(args.max, pair_max=args.pair_max)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"rows": rows}, indent=2, sort_keys=True) + "\n")
    for row in rows:
        print(row)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
