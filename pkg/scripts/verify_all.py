"""Run every verification suite at acceptance scale and print timings.

    python scripts/verify_all.py --trials 1000 --seed 0
"""

import argparse
import sys
import time

from dirac_bitensors import suites

parser = argparse.ArgumentParser()
parser.add_argument("--trials", type=int, default=1000)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

failed = False
for name, suite in suites.SUITES.items():
    trials = 200 if name in ("representation", "covariance") else args.trials
    start = time.perf_counter()
    result = suite(trials=trials, seed=args.seed)
    print(result.summary())
    print(f"  time: {time.perf_counter() - start:.2f}s")
    failed |= not result.ok
sys.exit(1 if failed else 0)
