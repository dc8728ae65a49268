"""Sweep the k < n search on data generated from known low-degree Schur functions.

For each trial a Schur function of degree d is built, its first n+1 Taylor
coefficients are taken as data, and the solver is asked for a solution of
degree at most d.  Reports how often the search recovers one.

    python3 scripts/low_degree_sweep.py --n 4 --degree 1 --trials 50
"""

import argparse
import json
import sys

import numpy as np

from lowschur.algebra import rational_taylor
from lowschur.interpolant import solve_rsp
from lowschur.sampling import random_schur_rational
from lowschur.schur import ProblemInstance


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--degree", type=int, default=1)
    ap.add_argument("--trials", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--radius", type=float, default=0.7)
    args = ap.parse_args()
    if not 0 <= args.degree < args.n:
        ap.error("need 0 <= degree < n")

    rng = np.random.default_rng(args.seed)
    statuses, degrees = {}, []
    for t in range(args.trials):
        f = random_schur_rational(rng, args.degree, args.radius)
        c = rational_taylor(f, args.n)
        res = solve_rsp(ProblemInstance(c, args.degree), count=1, seed=t)
        statuses[res.status] = statuses.get(res.status, 0) + 1
        if res.solutions:
            degrees.append(res[0].degree)
    print(json.dumps({"n": args.n, "degree": args.degree, "trials": args.trials, "status_counts": statuses,
                      "found_degrees": {str(d): degrees.count(d) for d in sorted(set(degrees))}}, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
