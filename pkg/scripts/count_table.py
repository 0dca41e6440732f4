#!/usr/bin/env python
"""Print p, a, c, d, p(2n,n) and a_m(n) for m = 1..5 side by side, all by enumeration.

    python scripts/count_table.py --max-n 20
"""
import argparse
import time

from partition_identities.partitions import count_table, partition_numbers


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=20)
    args = ap.parse_args()

    pn = partition_numbers(args.max_n + 1)
    header = ["n", "p", "a", "c", "d", "p2n_n", "a_3", "a_4", "a_5", "2p(n)-p(n+1)"]
    print(" ".join(f"{h:>8}" for h in header))
    t0 = time.perf_counter()
    for n in range(1, args.max_n + 1):
        row = count_table(n)
        vals = [n, row.p_n, row.a_n, row.c_n, row.d_n, row.p2n_n,
                row.a_m[3], row.a_m[4], row.a_m[5], 2 * pn[n] - pn[n + 1]]
        print(" ".join(f"{v:>8}" for v in vals))
    print(f"# {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
