#!/usr/bin/env python3
"""Compare the jit and pure homomorphism-counting kernels on real workloads.

The library selects the jit path by default and the pure path under
GAMMAHOM_PURE=1; this benchmark calls both directly on identical inputs,
checks that they agree, and reports median timings.
"""

import time

import gammahom as gh
from gammahom import ClassKind, ClassSpec, Digraph, HomMode
from gammahom import _kernels
from gammahom.homs import _search_inputs


def median_seconds(fn, repeats=5):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    times.sort()
    return times[len(times) // 2]


def chain(n):
    arcs = [(v, v) for v in range(n)] + [
        (u, v) for u in range(n) for v in range(u + 1, n)
    ]
    return Digraph(n, tuple(arcs))


def workloads():
    posets4 = gh.generate(ClassSpec(ClassKind.POSETS, 4))
    digraphs3 = gh.generate(ClassSpec(ClassKind.ALL_DIGRAPHS, 3))
    pent = gh.pentagon_spec()
    _, hull = gh.poset_rearrange(pent)
    yield "poset table 24x24, strict", [
        (g, h, HomMode.STRICT) for g in posets4 for h in posets4
    ]
    yield "poset table 24x24, all", [
        (g, h, HomMode.ALL) for g in posets4 for h in posets4
    ]
    yield "digraphs<=3 into rearranged 5-poset", [
        (g, hull, HomMode.STRICT) for g in digraphs3
    ]
    yield "8-chain self-maps", [(chain(8), chain(8), HomMode.ALL)]


def run_batch(kernel, batch):
    total = 0
    for adj_g, adj_h, strict, order in batch:
        total += int(kernel(adj_g, adj_h, order, strict))
    return total


def main():
    if not _kernels.JIT_ENABLED:
        print("jit kernels unavailable (GAMMAHOM_PURE set or numba missing);")
        print("timing the pure path only.")
    print(f"{'workload':<40} {'jit':>10} {'pure':>10} {'speedup':>9}")
    for name, pairs in workloads():
        batch = []
        for g, h, mode in pairs:
            adj_g, adj_h, strict, order = _search_inputs(g, h, mode)
            batch.append((adj_g, adj_h, strict, order))
        pure_total = run_batch(_kernels.count_homs_py, batch)
        pure_time = median_seconds(lambda: run_batch(_kernels.count_homs_py, batch))
        if _kernels.JIT_ENABLED:
            jit_total = run_batch(_kernels.count_homs_jit, batch)  # warm
            assert jit_total == pure_total, "kernel paths disagree"
            jit_time = median_seconds(lambda: run_batch(_kernels.count_homs_jit, batch))
            print(
                f"{name:<40} {jit_time * 1e3:8.2f}ms {pure_time * 1e3:8.2f}ms"
                f" {pure_time / jit_time:8.1f}x"
            )
        else:
            print(f"{name:<40} {'-':>10} {pure_time * 1e3:8.2f}ms {'-':>9}")


if __name__ == "__main__":
    main()
