#!/usr/bin/env python3
"""Compare greedy stable-deletion codebook sizes against the n!/(2n)^(3t-1)
reference target.  The two numbers describe different constructions, so this
is a report, not a check."""

import argparse

from delcode import greedy_sd_code, reference_size_bound, verify_sd_property


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--budgets", type=str, default="1,2")
    args = parser.parse_args()
    budgets = [int(v) for v in args.budgets.split(",")]

    print(f"{'n':>3} {'t':>3} {'greedy':>8} {'reference':>14} {'verified':>9}")
    for n in range(3, args.max_n + 1):
        for t in budgets:
            if t > n:
                continue
            book = greedy_sd_code(n, t)
            target = reference_size_bound(n, t)
            print(
                f"{n:>3} {t:>3} {len(book.codewords):>8} {float(target):>14.6g} "
                f"{str(verify_sd_property(book)):>9}"
            )


if __name__ == "__main__":
    main()
