"""Randomized check of the one-step degree law and its propagation along chains.

    python3 scripts/degree_law_probe.py --samples 5000 --seed 0
"""

import argparse
import json
import sys

from lowschur.verify import degree_law_probe


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--chain-length", type=int, default=4)
    args = ap.parse_args()
    rep = degree_law_probe(args.samples, seed=args.seed, chain_length=args.chain_length, strict=False)
    print(json.dumps({"samples": rep.samples, "cases": rep.case_counts,
                      "violations": len(rep.violations), "first_violation": rep.violations[:1]}, indent=2))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
