#!/usr/bin/env python3
"""Tabulate the plain, refined and bounded-product identity checks.

    python scripts/verify_identities.py --max-n 5 --max-x 40
"""

import argparse
import time

from lecturehall.series import (
    bounded_gf_identity,
    verify_plain,
    verify_refined,
)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--max-x", type=int, default=40)
    parser.add_argument("--refined-max-x", type=int, default=30)
    args = parser.parse_args()

    print(f"{'n':>3} {'check':<10} {'result':<40} {'seconds':>8}")
    for n in range(1, args.max_n + 1):
        for name, fn, d in [("plain", verify_plain, args.max_x),
                            ("refined", verify_refined, args.refined_max_x),
                            ("bounded", bounded_gf_identity, args.max_x)]:
            t0 = time.perf_counter()
            result = fn(n, d)
            print(f"{n:>3} {name:<10} {result.describe():<40} {time.perf_counter() - t0:8.3f}")


if __name__ == "__main__":
    main()
