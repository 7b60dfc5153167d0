#!/usr/bin/env python3
"""Benchmark harness for the exact-arithmetic hot spots.

Tracks the costs that dominate the verification suites: cyclotomic scalar
arithmetic, dense exact elimination (kernel/echelon), structure-constant
rewriting, trace-form radicals, and the fusion crosscheck grids.  Emits a
JSON timing table so regressions in the elimination pivots show up as
numbers, not vibes.

    python benchmarks/bench.py [--n 3] [--grid]
"""

import argparse
import json
import random
import time

from hopfring.algebra import AlgebraSpec, build_algebra
from hopfring.cyclo import cyclo_field
from hopfring.green import fusion_table
from hopfring.linalg import Mat, kernel_basis, rank
from hopfring.structure import jacobson_radical


def timed(fn, repeat=1):
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return round((time.perf_counter() - t0) / repeat, 4)


def bench_scalars(n, count=20000):
    f = cyclo_field(n)
    rng = random.Random(0)
    xs = [f.random(rng) for _ in range(64)]

    def run():
        acc = f.zero
        for i in range(count):
            a = xs[i % 64]
            b = xs[(i * 7 + 3) % 64]
            acc = acc + a * b
        return acc

    return timed(run)


def bench_elimination(n, size):
    f = cyclo_field(n)
    rng = random.Random(1)
    m = Mat.from_rows(
        f, [[f.random(rng, 4, 2) for _ in range(size)] for _ in range(size)]
    )
    return {
        "rank": timed(lambda: rank(m)),
        "kernel": timed(lambda: kernel_basis(m)),
    }


def bench_structure(n):
    out = {}
    for fam, p in (("tensor_taft", None), ("hpq", 0), ("hpq", 1)):
        spec = AlgebraSpec(fam, n, p)
        t0 = time.perf_counter()
        H = build_algebra(spec, assoc_sample=200, seed=0)
        # force the full structure-constant table
        for u in H.basis:
            for v in H.basis:
                H.mono_mul(u, v)
        build = round(time.perf_counter() - t0, 4)
        t0 = time.perf_counter()
        J = jacobson_radical(H)
        rad = round(time.perf_counter() - t0, 4)
        key = fam if p is None else "%s_p%s" % (fam, p)
        out[key] = {"table": build, "radical": rad, "radical_dim": J.dim}
    return out


def bench_grid(n):
    out = {}
    fams = ["tensor_taft", "hpq0"] + (["hpq1"] if n == 3 else [])
    for fam in fams:
        t0 = time.perf_counter()
        fusion_table(fam, n, "crosscheck")
        out[fam] = round(time.perf_counter() - t0, 2)
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--grid", action="store_true",
                        help="include the full fusion crosscheck grids")
    args = parser.parse_args()
    n = args.n
    report = {
        "n": n,
        "scalar_mul_add_20k": bench_scalars(n),
        "elimination": {
            "size_40": bench_elimination(n, 40),
            "size_80": bench_elimination(n, 80),
        },
        "algebra": bench_structure(n),
    }
    if args.grid:
        report["fusion_crosscheck"] = bench_grid(n)
    print(json.dumps(report, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
