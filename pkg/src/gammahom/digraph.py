"""Immutable finite digraphs, class predicates, and structural operators.

Vertices are always 0..n-1.  Arcs are ordered pairs; loops are allowed.  All
set-valued results come back in sorted order so that reports are reproducible.
Undirected graphs are represented as symmetric digraphs (every edge {v,w} is
stored as the two arcs vw and wv, a loop edge {v} as the arc vv).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import EmptyInducedSet, NotAPoset, NotSymmetric

#: Hard cap on vertex counts: one machine word of bitset per vertex.
MAX_VERTICES = 64

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """A finite digraph on vertices 0..n-1 with an arbitrary arc relation.

    Values are immutable after construction and safe to share; every operator
    in this module returns a new instance.  Arc storage is a per-vertex
    out-bitset plus in-bitset, so membership tests and neighborhood scans are
    constant-time per vertex word.
    """

    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        if self.n > MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} exceeds the cap of {MAX_VERTICES}")
        normalized = tuple(sorted({(int(u), int(v)) for u, v in self.arcs}))
        for u, v in normalized:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) out of range for n={self.n}")
        object.__setattr__(self, "arcs", normalized)

    # -- storage ----------------------------------------------------------

    @cached_property
    def out_bits(self) -> tuple[int, ...]:
        """Per-vertex bitmask of arc targets (bit w set iff vw is an arc)."""
        bits = [0] * self.n
        for u, v in self.arcs:
            bits[u] |= 1 << v
        return tuple(bits)

    @cached_property
    def in_bits(self) -> tuple[int, ...]:
        """Per-vertex bitmask of arc sources (bit w set iff wv is an arc)."""
        bits = [0] * self.n
        for u, v in self.arcs:
            bits[v] |= 1 << u
        return tuple(bits)

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Read-only (n, n) uint8 adjacency matrix; adjacency[u, v] == 1 iff uv is an arc."""
        mat = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.arcs:
            mat[u, v] = 1
        mat.flags.writeable = False
        return mat

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_bits[u] >> v & 1)

    # -- neighborhoods ----------------------------------------------------

    def successors(self, v: int) -> tuple[int, ...]:
        """Arc targets of v, including v itself when v has a loop."""
        return _bits_to_vertices(self.out_bits[v])

    def predecessors(self, v: int) -> tuple[int, ...]:
        """Arc sources of v, including v itself when v has a loop."""
        return _bits_to_vertices(self.in_bits[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Open neighborhood: vertices adjacent to v in either direction, never v itself."""
        return _bits_to_vertices((self.out_bits[v] | self.in_bits[v]) & ~(1 << v))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        """Open in-neighborhood: sources of proper arcs into v."""
        return _bits_to_vertices(self.in_bits[v] & ~(1 << v))

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Open out-neighborhood: targets of proper arcs out of v."""
        return _bits_to_vertices(self.out_bits[v] & ~(1 << v))

    # -- relation predicates -----------------------------------------------

    @cached_property
    def loops(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.has_arc(v, v))

    @cached_property
    def proper_arcs(self) -> tuple[Arc, ...]:
        return tuple((u, v) for u, v in self.arcs if u != v)

    @cached_property
    def is_reflexive(self) -> bool:
        return len(self.loops) == self.n

    @cached_property
    def is_irreflexive(self) -> bool:
        return not self.loops

    @cached_property
    def is_symmetric(self) -> bool:
        return all(self.has_arc(v, u) for u, v in self.arcs)

    @cached_property
    def is_antisymmetric(self) -> bool:
        return not any(u != v and self.has_arc(v, u) for u, v in self.arcs)

    @cached_property
    def is_transitive(self) -> bool:
        out = self.out_bits
        for u, v in self.arcs:
            if out[v] & ~out[u]:
                return False
        return True

    @cached_property
    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        sym = tuple(self.out_bits[v] | self.in_bits[v] for v in range(self.n))
        while frontier:
            nxt = 0
            for v in _bits_to_vertices(frontier):
                nxt |= sym[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "arcs": [[u, v] for u, v in self.arcs]}

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: dict) -> "Digraph":
        if not isinstance(data, dict) or "n" not in data or "arcs" not in data:
            raise ValueError("digraph JSON must be an object with 'n' and 'arcs'")
        return cls(int(data["n"]), tuple((int(u), int(v)) for u, v in data["arcs"]))

    @classmethod
    def loads(cls, text: str) -> "Digraph":
        return cls.from_json_dict(json.loads(text))

    def __repr__(self) -> str:
        body = ",".join(f"{u}{v}" if self.n <= 10 else f"{u}-{v}" for u, v in self.arcs)
        return f"D({self.n}; {body or '-'})"


def _bits_to_vertices(bits: int) -> tuple[int, ...]:
    out = []
    v = 0
    while bits:
        if bits & 1:
            out.append(v)
        bits >>= 1
        v += 1
    return tuple(out)


# -- digraph classes -------------------------------------------------------


class ClassKind(Enum):
    """Selector for the supported digraph classes."""

    ALL_DIGRAPHS = "digraphs"
    PROPER_ACYCLIC = "proper-acyclic"  # loop-removed part acyclic
    POSETS = "posets"
    STRICT_POSETS = "strict-posets"
    UNDIRECTED = "undirected"
    ODD_CYCLE_FREE = "odd-cycle-free"


@dataclass(frozen=True)
class ClassSpec:
    """A digraph class restricted to explicit size bounds.

    All verdicts computed against a ClassSpec are relative to this finite
    truncation; nothing in the library claims anything about the unbounded
    class.
    """

    kind: ClassKind
    max_vertices: int
    max_arcs: int | None = None

    def __post_init__(self) -> None:
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be positive")
        if self.max_arcs is not None and self.max_arcs < 0:
            raise ValueError("max_arcs must be non-negative")

    def describe(self) -> str:
        bound = f"n<={self.max_vertices}"
        if self.max_arcs is not None:
            bound += f",arcs<={self.max_arcs}"
        return f"{self.kind.value}[{bound}]"

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind.value, "max_vertices": self.max_vertices}
        if self.max_arcs is not None:
            out["max_arcs"] = self.max_arcs
        return out


def is_member(g: Digraph, spec: ClassSpec) -> bool:
    """Class predicate and size bounds together."""
    if g.n > spec.max_vertices:
        return False
    if spec.max_arcs is not None and len(g.arcs) > spec.max_arcs:
        return False
    return satisfies_kind(g, spec.kind)


def satisfies_kind(g: Digraph, kind: ClassKind) -> bool:
    """Class predicate alone, ignoring size bounds."""
    if kind is ClassKind.ALL_DIGRAPHS:
        return True
    if kind is ClassKind.PROPER_ACYCLIC:
        return is_acyclic(loops_removed(g))
    if kind is ClassKind.POSETS:
        return g.is_reflexive and g.is_antisymmetric and g.is_transitive
    if kind is ClassKind.STRICT_POSETS:
        return g.is_irreflexive and g.is_antisymmetric and g.is_transitive
    if kind is ClassKind.UNDIRECTED:
        return g.is_symmetric
    if kind is ClassKind.ODD_CYCLE_FREE:
        return g.is_symmetric and not _has_odd_closed_walk(loops_removed(g))
    raise ValueError(f"unknown class kind {kind!r}")


def _has_odd_closed_walk(g: Digraph) -> bool:
    # Symmetric loop-free graph: odd closed walk exists iff some component is
    # not 2-colorable.
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return True
    return False


# -- structural operators ---------------------------------------------------


def loops_removed(g: Digraph) -> Digraph:
    """Drop the diagonal of the arc relation; idempotent."""
    return Digraph(g.n, g.proper_arcs)


def reflexive_closure(g: Digraph) -> Digraph:
    return Digraph(g.n, g.arcs + tuple((v, v) for v in range(g.n)))


def transitive_hull(g: Digraph) -> Digraph:
    """Smallest transitive arc set containing the arcs of g.

    The arc uv is present in the result iff g has a walk of length >= 1 from
    u to v.  Computed by repeated boolean matrix squaring; exact.
    """
    reach = g.adjacency.astype(np.int64)
    while True:
        bigger = ((reach + reach @ reach) > 0).astype(np.int64)
        if np.array_equal(bigger, reach):
            break
        reach = bigger
    arcs = tuple((int(u), int(v)) for u, v in zip(*np.nonzero(reach)))
    return Digraph(g.n, arcs)


def is_acyclic(g: Digraph) -> bool:
    """No closed walk of length >= 1 (so any loop already makes g cyclic)."""
    hull = transitive_hull(g)
    return not hull.loops


def induced(g: Digraph, subset: Iterable[int]) -> Digraph:
    """Subgraph induced on a vertex subset, relabeled by increasing original index."""
    keep = sorted(set(subset))
    if not keep:
        raise EmptyInducedSet("cannot induce on the empty vertex set")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise ValueError(f"subset {keep} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(keep)}
    arcs = tuple(
        (index[u], index[v]) for u, v in g.arcs if u in index and v in index
    )
    return Digraph(len(keep), arcs)


def relabel(g: Digraph, perm: Iterable[int]) -> Digraph:
    """Apply a vertex permutation: arc uv becomes perm[u] perm[v]."""
    p = tuple(perm)
    if sorted(p) != list(range(g.n)):
        raise ValueError(f"{p} is not a permutation of 0..{g.n - 1}")
    return Digraph(g.n, tuple((p[u], p[v]) for u, v in g.arcs))


def direct_sum(g: Digraph, h: Digraph) -> Digraph:
    """Disjoint union; the second summand is shifted past the first."""
    shifted = tuple((u + g.n, v + g.n) for u, v in h.arcs)
    return Digraph(g.n + h.n, g.arcs + shifted)


def ordinal_sum(p: Digraph, q: Digraph) -> Digraph:
    """Disjoint union plus every arc from the first poset into the second."""
    for name, part in (("first", p), ("second", q)):
        if not satisfies_kind(part, ClassKind.POSETS):
            raise NotAPoset(f"{name} argument of the ordinal sum is not a poset")
    between = tuple((u, v + p.n) for u in range(p.n) for v in range(q.n))
    base = direct_sum(p, q)
    return Digraph(base.n, base.arcs + between)


def symmetric_closure_view(g: Digraph) -> Digraph:
    """Add every reversed arc; used to ingest undirected edge lists."""
    return Digraph(g.n, g.arcs + tuple((v, u) for u, v in g.arcs))


def underlying(g: Digraph) -> Digraph:
    """Identity on symmetric digraphs (the internal undirected representation)."""
    if not g.is_symmetric:
        raise NotSymmetric("underlying graph is only defined for symmetric digraphs")
    return g


def from_undirected_edges(n: int, edges: Iterable[Iterable[int]]) -> Digraph:
    """Build the symmetric representation of an undirected edge list.

    An edge is a 1- or 2-element collection of vertices; {v} becomes the loop
    arc vv, {v, w} becomes both vw and wv.
    """
    arcs: list[Arc] = []
    for edge in edges:
        ends = sorted(set(edge))
        if len(ends) == 1:
            arcs.append((ends[0], ends[0]))
        elif len(ends) == 2:
            arcs.append((ends[0], ends[1]))
            arcs.append((ends[1], ends[0]))
        else:
            raise ValueError(f"edge {ends} must have one or two endpoints")
    return Digraph(n, tuple(arcs))


def edges_of(g: Digraph) -> tuple[tuple[int, ...], ...]:
    """Edge set of a symmetric digraph: sorted pairs, loops as 1-tuples."""
    if not g.is_symmetric:
        raise NotSymmetric("edge set is only defined for symmetric digraphs")
    seen = set()
    for u, v in g.arcs:
        seen.add((u,) if u == v else (min(u, v), max(u, v)))
    return tuple(sorted(seen))


def covering_arcs(p: Digraph) -> tuple[Arc, ...]:
    """Covering relation of a poset: proper arcs with no intermediate vertex."""
    if not satisfies_kind(p, ClassKind.POSETS):
        raise NotAPoset("covering arcs are only defined for posets")
    covers = []
    for u, v in p.proper_arcs:
        if not any(w != u and w != v and p.has_arc(u, w) and p.has_arc(w, v)
                   for w in range(p.n)):
            covers.append((u, v))
    return tuple(covers)


def to_dot(g: Digraph, name: str = "G", hasse: bool = False) -> str:
    """DOT rendering; with hasse=True a poset is drawn by its covering arcs only."""
    lines = [f"digraph {name} {{"]
    arcs = covering_arcs(g) if hasse else g.arcs
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in arcs:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines)
