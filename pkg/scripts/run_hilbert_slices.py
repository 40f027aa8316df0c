#!/usr/bin/env python3
"""Graded dimensions of the quotient by generic weight-zero forms.

Reproduces the Hilbert-function profile of the slice experiment; the (3, 3)
window takes a few seconds per seed.

Usage: python scripts/run_hilbert_slices.py --m 3 --n 3 --seeds 0 1 2
"""

import argparse
import time

from laurent_eulerian.eulerian import eulerian
from laurent_eulerian.experiments import graded_quotient_dims


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, required=True)
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--j-max", type=int, default=None)
    args = ap.parse_args()

    bound = eulerian(args.m + args.n - 1, args.m - 1)
    ok = True
    for seed in args.seeds:
        t0 = time.monotonic()
        r = graded_quotient_dims(args.m, args.n, seed=seed, j_max=args.j_max)
        dt = time.monotonic() - t0
        print(f"seed {seed}: dims {r.dims}  total {r.total}  ({dt:.1f}s)")
        if r.seeds_tried != (seed,):
            print(f"  note: degenerate seeds retried, used {r.seed}")
        if r.total != bound:
            print(f"  MISMATCH: expected total {bound}")
            ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
