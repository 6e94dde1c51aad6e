#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the two hot paths on representative desk-scale inputs:
  * the exhaustive graph scan (all 2^C(n,2) labeled graphs), and
  * the branch-and-bound refutation/find searches behind solve().

Usage: python3 benchmarks/bench_backends.py [--heavy]
    --heavy adds the n=7 scan and the (8,3,2) search (a few minutes in
    pure Python, well under a minute compiled).
"""

import argparse
import time

from domset import _kernels

try:
    from domset import _ckernels
except ImportError:
    _ckernels = None

from domset.core import enumerate_ksubsets
from domset.solver import build_instance


def scan_inputs(n):
    pair_masks = list(enumerate_ksubsets(n, 2))
    slot = {m: i for i, m in enumerate(pair_masks)}
    tri_masks = []
    edge_tri = [0] * len(pair_masks)
    for ti, tmask in enumerate(enumerate_ksubsets(n, 3)):
        bits = 0
        m = tmask
        while m:
            low = m & -m
            e = slot[tmask ^ low]
            bits |= 1 << e
            edge_tri[e] |= 1 << ti
            m ^= low
        tri_masks.append(bits)
    return len(pair_masks), tri_masks, edge_tri


def time_call(fn, *args, **kwargs):
    start = time.monotonic()
    result = fn(*args, **kwargs)
    return time.monotonic() - start, result


def bench_scan(n):
    m, tris, etm = scan_inputs(n)
    t_py, r_py = time_call(_kernels.scan_max_f, m, tris, etm)
    row = [f"{'scan all graphs n=' + str(n):<28}", f"{t_py:>10.3f}s"]
    if _ckernels is not None:
        t_cy, r_cy = time_call(_ckernels.scan_max_f, m, tris, etm)
        assert r_py[0] == r_cy[0] and sorted(r_py[1]) == sorted(r_cy[1])
        row += [f"{t_cy:>10.3f}s", f"{t_py / max(t_cy, 1e-9):>9.1f}x"]
    print("".join(row))


def bench_search(n, l, k, t):
    inst = build_instance(n, l, k)
    nb, gr = list(inst.nbhd), list(inst.masks)
    t_py, r_py = time_call(_kernels.search_leq, nb, inst.kmask, gr, t, False)
    label = f"search G_({l},{k}) n={n} t={t}"
    row = [f"{label:<28}", f"{t_py:>10.3f}s"]
    if _ckernels is not None:
        t_cy, r_cy = time_call(_ckernels.search_leq, nb, inst.kmask, gr, t, False)
        assert (r_py[0] is None) == (r_cy[0] is None) and r_py[1] == r_cy[1]
        row += [f"{t_cy:>10.3f}s", f"{t_py / max(t_cy, 1e-9):>9.1f}x"]
    print("".join(row))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true")
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled backend not built; timing the pure backend only")
        print(f"{'workload':<28}{'pure':>11}")
    else:
        print(f"{'workload':<28}{'pure':>11}{'compiled':>11}{'speedup':>10}")
    bench_scan(5)
    bench_scan(6)
    bench_search(7, 3, 2, 12)   # refutation just below gamma
    bench_search(7, 3, 2, 13)   # find at the optimum
    bench_search(9, 4, 2, 12)   # refutation slice of the n=9 proof
    if args.heavy:
        bench_scan(7)
        bench_search(8, 3, 2, 17)
        bench_search(8, 3, 2, 18)


if __name__ == "__main__":
    main()
