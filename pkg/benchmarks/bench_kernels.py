"""Compare the compiled and pure-Python kernels on the oracle's hot loops.

    python benchmarks/bench_kernels.py [--n 6] [--repeat 3]
"""

import argparse
import statistics
import time

from planocc import _kernels_py, maps, oracle

try:
    from planocc import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _split(code):
    return list(code[0::2]), list(code[1::2])


def bench_codes(impl, codes):
    for c in codes:
        s, a = _split(c)
        impl.all_root_codes(s, a)


def bench_scan(impl, codes, pattern, mode):
    key = oracle._pattern_key(pattern)
    total = 0
    for c in codes:
        s, a = _split(c)
        total += impl.scan_occurrences(s, a, 0, key.edges, key.code, key.ell, key.valencies, mode)
    return total


def timed(fn, repeat):
    runs = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t)
    return statistics.median(runs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    res = oracle.enumerate_maps(args.n, n_max=max(args.n, 6))
    reps, codes = res.unrooted, res.codes
    quad = maps.quad_with_diagonal()
    tri = maps.cycle_map(3)
    cases = [
        (f"all_root_codes, {len(reps)} classes", lambda k: bench_codes(k, reps)),
        (f"pattern scan (quad+diagonal), {len(codes)} maps", lambda k: bench_scan(k, codes, quad, 0)),
        (f"submap scan (triangle), {len(codes)} maps", lambda k: bench_scan(k, codes, tri, 1)),
    ]
    impls = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    print(f"{'case':48s} " + " ".join(f"{name:>10s}" for name, _ in impls) + "   speedup")
    for label, fn in cases:
        times = [timed(lambda k=k: fn(k), args.repeat) for _, k in impls]
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) > 1 else "      n/a"
        print(f"{label:48s} " + " ".join(f"{t:9.3f}s" for t in times) + "  " + speed)
    if _kernels_c:
        same = bench_scan(_kernels_c, codes, quad, 0) == bench_scan(_kernels_py, codes, quad, 0)
        print("backends agree on pattern totals:", same)


if __name__ == "__main__":
    main()
