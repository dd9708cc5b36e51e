#!/usr/bin/env python3
"""Time every hot kernel under the numba and the numpy backend.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from dedekind_ehrhart import _kernels
from dedekind_ehrhart.laurent import coth_series_singular


def cases():
    K = 6
    moduli = [3, 5, 7, 105]
    singular = np.array([coth_series_singular(c, K).coeffs for c in moduli])
    rs = np.arange(1, 106)
    return {
        "sawtooth_numerator(a=1234, b=99991)": lambda k: k.sawtooth_numerator(1234, 99991),
        "cot_product_sum(a=1234, b=99991)": lambda k: k.cot_product_sum(k.cot_table(99991), 1234, 99991),
        "dedekind_row(b=1999)": lambda k: k.dedekind_row(1999),
        "count_simplex(3,5,7; t=12)": lambda k: k.count_simplex([35, 21, 15], 105 * 12),
        "count_polygon(pentagon, box 200^2)": lambda k: k.count_polygon(
            [0, 120, 200, 160, 40], [0, -20, 90, 200, 160]
        ),
        "theorem_sum(3,5,7; K=6)": lambda k: k.theorem_sum(moduli, singular, rs, K),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    names = sorted(_kernels.BACKENDS)
    print(f"best of {args.repeat} runs, seconds per call; smaller is better\n")
    print(f"{'kernel':40s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}")
    for label, call in cases().items():
        times = {}
        for name in names:
            kern = _kernels.BACKENDS[name]
            call(kern)  # compile / warm up
            times[name] = min(timeit.repeat(lambda: call(kern), number=1, repeat=args.repeat))
        speedup = times["numpy"] / times["numba"] if "numba" in times else float("nan")
        print(f"{label:40s}" + "".join(f"{times[n]:12.2e}" for n in names) + f"{speedup:9.1f}x")


if __name__ == "__main__":
    main()
