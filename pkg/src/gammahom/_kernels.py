"""Backtracking kernels for homomorphism counting and enumeration.

One implementation body serves two paths: the default jit path compiles it
with numba (nopython, nogil, on-disk cache), and setting GAMMAHOM_PURE=1 in
the environment keeps the plain-Python fallback.  `benchmarks/bench_kernels.py`
compares the two.

Kernels take uint8 adjacency matrices, a static assignment order, and a
strictness flag; they know nothing about Digraph objects.
"""

from __future__ import annotations

import os

import numpy as np


def jit_requested() -> bool:
    flag = os.environ.get("GAMMAHOM_PURE", "").strip().lower()
    if flag in {"1", "true", "yes", "on"}:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def _count_homs_impl(adj_g, adj_h, order, strict):
    """Count maps f with f(u)f(v) an arc of H for every arc uv of G.

    With strict=True, proper arcs must additionally land on proper arcs.
    Vertices are assigned along `order`; candidates are pruned against all
    previously assigned vertices, so the count is order-independent.
    """
    n = adj_g.shape[0]
    m = adj_h.shape[0]
    img = np.zeros(n, dtype=np.int64)
    cand = np.zeros(n, dtype=np.int64)
    total = 0
    pos = 0
    while pos >= 0:
        v = order[pos]
        c = cand[pos]
        if c >= m:
            cand[pos] = 0
            pos -= 1
            continue
        cand[pos] = c + 1
        if adj_g[v, v] != 0 and adj_h[c, c] == 0:
            continue
        ok = True
        for i in range(pos):
            w = order[i]
            d = img[w]
            if adj_g[w, v] != 0 and (adj_h[d, c] == 0 or (strict and d == c)):
                ok = False
                break
            if adj_g[v, w] != 0 and (adj_h[c, d] == 0 or (strict and c == d)):
                ok = False
                break
        if not ok:
            continue
        img[v] = c
        if pos == n - 1:
            total += 1
        else:
            pos += 1
    return total


def _fill_homs_impl(adj_g, adj_h, order, strict, out):
    """Same search as the counter, but each accepted map is written to `out`.

    Rows appear in search order (not lexicographic); the caller sorts.
    Returns the number of rows written; `out` must be large enough.
    """
    n = adj_g.shape[0]
    m = adj_h.shape[0]
    img = np.zeros(n, dtype=np.int64)
    cand = np.zeros(n, dtype=np.int64)
    written = 0
    pos = 0
    while pos >= 0:
        v = order[pos]
        c = cand[pos]
        if c >= m:
            cand[pos] = 0
            pos -= 1
            continue
        cand[pos] = c + 1
        if adj_g[v, v] != 0 and adj_h[c, c] == 0:
            continue
        ok = True
        for i in range(pos):
            w = order[i]
            d = img[w]
            if adj_g[w, v] != 0 and (adj_h[d, c] == 0 or (strict and d == c)):
                ok = False
                break
            if adj_g[v, w] != 0 and (adj_h[c, d] == 0 or (strict and c == d)):
                ok = False
                break
        if not ok:
            continue
        img[v] = c
        if pos == n - 1:
            for j in range(n):
                out[written, j] = img[j]
            written += 1
        else:
            pos += 1
    return written


# Plain-Python references stay importable regardless of the active path (the
# benchmark and the overflow fallback rely on them: uncompiled, `total` is an
# unbounded Python int).
count_homs_py = _count_homs_impl
fill_homs_py = _fill_homs_impl

JIT_ENABLED = jit_requested()

if JIT_ENABLED:
    from numba import njit

    count_homs_jit = njit(cache=True, nogil=True)(_count_homs_impl)
    fill_homs_jit = njit(cache=True, nogil=True)(_fill_homs_impl)
    count_homs = count_homs_jit
    fill_homs = fill_homs_jit
else:
    count_homs_jit = None
    fill_homs_jit = None
    count_homs = count_homs_py
    fill_homs = fill_homs_py
