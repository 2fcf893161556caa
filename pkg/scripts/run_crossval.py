#!/usr/bin/env python3
"""Cross-validate the decision procedure against the brute-force oracle.

Exhaustive up to order 5, randomized beyond; any false positive is printed
with its full audit (it would be a conjecture counterexample candidate).
"""

import argparse
import json
import sys

from hamtg.lab import crossval


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--random", type=int, default=None, metavar="COUNT")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--cache-dir", default=None)
    args = parser.parse_args()

    result = crossval(
        args.n,
        exhaustive=args.random is None,
        random_count=args.random,
        seed=args.seed,
        cache_dir=args.cache_dir,
    )
    json.dump(result, sys.stdout, indent=2, sort_keys=True)
    print()
    if result["false_negative_count"]:
        print("FALSE NEGATIVES PRESENT: implementation bug", file=sys.stderr)
        sys.exit(1)
    if result["false_positive_count"]:
        print(
            "false positives found: conjecture counterexample candidates above",
            file=sys.stderr,
        )


if __name__ == "__main__":
    main()
