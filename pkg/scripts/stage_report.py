#!/usr/bin/env python
"""Build every stage of the generating-function derivation and time it.

    python scripts/stage_report.py --order 300 --show 15
"""
import argparse
import time

from partition_identities.identities import CHAIN, Stage, build_stage, verify_cauchy_specializations


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=200)
    ap.add_argument("--show", type=int, default=12, help="coefficients to print per stage")
    args = ap.parse_args()

    built = {}
    for stage in (*CHAIN, Stage.HEINE_SPEC, Stage.CAUCHY_T1, Stage.CAUCHY_T2):
        t0 = time.perf_counter()
        built[stage] = f = build_stage(stage, args.order)
        dt = time.perf_counter() - t0
        lo = min(f.lowest_exp, 0)
        print(f"{stage.value:>10} [{dt:6.2f}s] q^{lo}..: {f.window(lo, lo + args.show - 1)}")

    for a, b in zip(CHAIN, CHAIN[1:]):
        diff = built[a].first_difference(built[b])
        print(f"{a.value} vs {b.value}: " + ("equal" if diff is None else f"differ at q^{diff}"))
    print(verify_cauchy_specializations(args.order))


if __name__ == "__main__":
    main()
