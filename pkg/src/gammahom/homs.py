"""Enumerate and count homomorphisms between digraphs.

Three modes: all homomorphisms, strict homomorphisms (proper arcs land on
proper arcs), and homomorphisms of the loop-removed graphs.  Counting goes
through the backtracking kernels; enumeration is lazy and always yields maps
in lexicographic image order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterator

import numpy as np

from . import _kernels
from .connectivity import components
from .digraph import ClassKind, Digraph, induced, loops_removed, satisfies_kind
from .errors import ArityMismatch, NotAPoset

#: Counts at or above this many candidate maps fall back to the plain-Python
#: kernel, whose accumulator is an unbounded int.
_INT64_SAFE = 2**62


class HomMode(Enum):
    ALL = "all"
    STRICT = "strict"
    LOOPS_REMOVED = "loops-removed"


@dataclass(frozen=True)
class VertexMap:
    """A total map between the vertex sets 0..domain-1 and 0..codomain-1."""

    domain: int
    codomain: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if len(self.images) != self.domain:
            raise ArityMismatch(
                f"expected {self.domain} images, got {len(self.images)}"
            )
        if any(not 0 <= x < self.codomain for x in self.images):
            raise ArityMismatch(f"images {self.images} out of range 0..{self.codomain - 1}")

    def __call__(self, v: int) -> int:
        return self.images[v]

    def preimage(self, target: int) -> tuple[int, ...]:
        return tuple(v for v in range(self.domain) if self.images[v] == target)

    @property
    def image_set(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.images)))

    def __repr__(self) -> str:
        return f"VertexMap({','.join(map(str, self.images))})"


def identity_map(n: int) -> VertexMap:
    return VertexMap(n, n, tuple(range(n)))


def compose(outer: VertexMap, inner: VertexMap) -> VertexMap:
    """(outer o inner)(v) = outer(inner(v))."""
    if inner.codomain != outer.domain:
        raise ArityMismatch(
            f"cannot compose: inner codomain {inner.codomain} != outer domain {outer.domain}"
        )
    return VertexMap(inner.domain, outer.codomain, tuple(outer.images[x] for x in inner.images))


def constant_map(g: Digraph, h: Digraph, target: int) -> VertexMap:
    return VertexMap(g.n, h.n, (target,) * g.n)


# -- membership --------------------------------------------------------------


def is_homomorphism(g: Digraph, h: Digraph, f: VertexMap, mode: HomMode = HomMode.ALL) -> bool:
    """Membership predicate consistent with enumeration."""
    if f.domain != g.n or f.codomain != h.n:
        raise ArityMismatch(
            f"map {f.domain}->{f.codomain} does not fit digraphs {g.n}->{h.n}"
        )
    imgs = f.images
    if mode in (HomMode.ALL, HomMode.STRICT):
        for u, v in g.arcs:
            if not h.has_arc(imgs[u], imgs[v]):
                return False
    if mode in (HomMode.STRICT, HomMode.LOOPS_REMOVED):
        for u, v in g.proper_arcs:
            a, b = imgs[u], imgs[v]
            if a == b or not h.has_arc(a, b):
                return False
    return True


# -- enumeration and counting -------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _source_inputs(g: Digraph, starred: bool):
    adj = loops_removed(g).adjacency if starred else g.adjacency
    degree = adj.sum(axis=0).astype(np.int64) + adj.sum(axis=1).astype(np.int64)
    order = np.array(sorted(range(g.n), key=lambda v: (-degree[v], v)), dtype=np.int64)
    order.flags.writeable = False
    return adj, order


@lru_cache(maxsize=1 << 16)
def _target_adjacency(h: Digraph, starred: bool):
    return loops_removed(h).adjacency if starred else h.adjacency


def _search_inputs(g: Digraph, h: Digraph, mode: HomMode):
    """Adjacency matrices, strictness flag, and static assignment order.

    The loop-removed mode runs the plain search on the starred graphs.  The
    order is by descending total degree with index tie-break; the result set
    does not depend on it.
    """
    starred = mode is HomMode.LOOPS_REMOVED
    adj_g, order = _source_inputs(g, starred)
    adj_h = _target_adjacency(h, starred)
    strict = mode is HomMode.STRICT
    return adj_g, adj_h, strict, order


def count_homs(g: Digraph, h: Digraph, mode: HomMode = HomMode.ALL) -> int:
    """Exact count; switches to unbounded integers when int64 could overflow."""
    adj_g, adj_h, strict, order = _search_inputs(g, h, mode)
    if h.n ** g.n >= _INT64_SAFE:
        return _kernels.count_homs_py(adj_g, adj_h, order, strict)
    return int(_kernels.count_homs(adj_g, adj_h, order, strict))


def enumerate_homs(g: Digraph, h: Digraph, mode: HomMode = HomMode.ALL) -> "HomSetHandle":
    return HomSetHandle(g, h, mode)


@dataclass(frozen=True)
class HomSetHandle:
    """Lazily enumerable homomorphism set with a cached exact count.

    Iteration yields maps in lexicographic order of their image tuples,
    independent of how the work is scheduled.
    """

    source: Digraph
    target: Digraph
    mode: HomMode

    @cached_property
    def count(self) -> int:
        return count_homs(self.source, self.target, self.mode)

    @cached_property
    def maps(self) -> tuple[VertexMap, ...]:
        """Materialized, lexicographically sorted."""
        adj_g, adj_h, strict, order = _search_inputs(self.source, self.target, self.mode)
        total = self.count
        out = np.zeros((total, self.source.n), dtype=np.int64)
        written = int(_kernels.fill_homs(adj_g, adj_h, order, strict, out))
        assert written == total
        if total > 1:
            keys = tuple(out[:, i] for i in range(self.source.n - 1, -1, -1))
            out = out[np.lexsort(keys)]
        n, m = self.source.n, self.target.n
        return tuple(VertexMap(n, m, tuple(int(x) for x in row)) for row in out)

    def __iter__(self) -> Iterator[VertexMap]:
        """Backtracking generator in natural vertex order; lexicographic by construction."""
        g, h = self.source, self.target
        if self.mode is HomMode.LOOPS_REMOVED:
            g_eff, h_eff = loops_removed(g), loops_removed(h)
            strict = False
        else:
            g_eff, h_eff = g, h
            strict = self.mode is HomMode.STRICT
        n, m = g_eff.n, h_eff.n
        img = [0] * n

        def extend(v: int) -> Iterator[VertexMap]:
            if v == n:
                yield VertexMap(n, m, tuple(img))
                return
            for c in range(m):
                if g_eff.has_arc(v, v) and not h_eff.has_arc(c, c):
                    continue
                ok = True
                for w in range(v):
                    d = img[w]
                    if g_eff.has_arc(w, v) and (not h_eff.has_arc(d, c) or (strict and d == c)):
                        ok = False
                        break
                    if g_eff.has_arc(v, w) and (not h_eff.has_arc(c, d) or (strict and c == d)):
                        ok = False
                        break
                if not ok:
                    continue
                img[v] = c
                yield from extend(v + 1)
            return

        return extend(0)

    def __contains__(self, f: VertexMap) -> bool:
        return is_homomorphism(self.source, self.target, f, self.mode)


# -- decomposition formulas ----------------------------------------------------


def upsets(p: Digraph) -> tuple[tuple[int, ...], ...]:
    """All upsets of a poset: subsets closed under going up, including the
    empty set and the full vertex set."""
    if not satisfies_kind(p, ClassKind.POSETS):
        raise NotAPoset("upsets are only defined for posets")
    if p.n > 20:
        raise ValueError("upset enumeration is limited to n <= 20")
    out = []
    for mask in range(1 << p.n):
        ok = True
        for u in range(p.n):
            if mask >> u & 1 and p.out_bits[u] & ~mask:
                ok = False
                break
        if ok:
            out.append(tuple(v for v in range(p.n) if mask >> v & 1))
    return tuple(sorted(out, key=lambda u: (len(u), u)))


def _strict_count_on(p: Digraph, subset: tuple[int, ...], q: Digraph) -> int:
    # Empty restriction contributes the empty map.
    if not subset:
        return 1
    return count_homs(induced(p, subset), q, HomMode.STRICT)


def strict_count_direct_sum(g: Digraph, h1: Digraph, h2: Digraph) -> int:
    """Strict count into a direct sum via the component product formula.

    Every connectivity component of the source maps wholly into one summand,
    so the counts per component add and the component totals multiply.
    """
    total = 1
    for block in components(g):
        piece = induced(g, block)
        total *= count_homs(piece, h1, HomMode.STRICT) + count_homs(piece, h2, HomMode.STRICT)
    return total


def strict_count_ordinal_sum(p: Digraph, q1: Digraph, q2: Digraph) -> int:
    """Strict count into an ordinal sum via the upset splitting formula.

    The pre-image of the upper summand is an upset; summing over all upsets
    of the source and multiplying the two restricted counts gives the total.
    """
    for name, part in (("source", p), ("first target", q1), ("second target", q2)):
        if not satisfies_kind(part, ClassKind.POSETS):
            raise NotAPoset(f"{name} of the ordinal-sum formula is not a poset")
    everything = tuple(range(p.n))
    total = 0
    for up in upsets(p):
        rest = tuple(v for v in everything if v not in up)
        total += _strict_count_on(p, rest, q1) * _strict_count_on(p, up, q2)
    return total
