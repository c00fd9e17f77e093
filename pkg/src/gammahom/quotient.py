"""Quotients of homomorphisms: block digraph, canonical factor maps, hulls.

Every homomorphism factors through the partition of its source into
pre-image connectivity components.  The block digraph is materialized as a
first-class Digraph (blocks relabeled 0..k-1 by smallest member) so it can
feed every other operation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .connectivity import map_partition
from .digraph import ClassKind, Digraph, satisfies_kind, transitive_hull
from .errors import NotAHomomorphism
from .homs import HomMode, HomSetHandle, VertexMap, compose, is_homomorphism


@dataclass(frozen=True)
class QuotientDigraph:
    """Block partition of a homomorphism plus the induced arc structure.

    blocks: the pre-image components, each sorted, listed by smallest member.
    block_of: vertex -> block index (encodes the projection map).
    iota: block index -> target vertex (encodes the embedding map).
    digraph: the blocks as a Digraph; arc (a, b) present iff some arc of the
    source joins a member of block a to a member of block b.
    """

    source: Digraph
    target: Digraph
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]
    iota: tuple[int, ...]
    digraph: Digraph

    @cached_property
    def pi_map(self) -> VertexMap:
        return VertexMap(self.source.n, self.digraph.n, self.block_of)

    @cached_property
    def iota_map(self) -> VertexMap:
        return VertexMap(self.digraph.n, self.target.n, self.iota)

    @cached_property
    def original_map(self) -> VertexMap:
        """The factorization composed back together."""
        return compose(self.iota_map, self.pi_map)

    def to_json_dict(self) -> dict:
        return {
            "digraph": self.digraph.to_json_dict(),
            "blocks": [list(b) for b in self.blocks],
            "iota": list(self.iota),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


def quotient_of(g: Digraph, h: Digraph, xi: VertexMap) -> QuotientDigraph:
    """Quotient of a homomorphism from g to h.

    The projection is a homomorphism onto the block digraph, the embedding is
    a strict homomorphism into the target, and their composite is the input.
    """
    if not is_homomorphism(g, h, xi, HomMode.ALL):
        raise NotAHomomorphism("quotients are only defined for homomorphisms")
    blocks = map_partition(g, xi)
    block_of = [0] * g.n
    for i, block in enumerate(blocks):
        for v in block:
            block_of[v] = i
    arcs = tuple(sorted({(block_of[u], block_of[v]) for u, v in g.arcs}))
    digraph = Digraph(len(blocks), arcs)
    iota = tuple(xi.images[block[0]] for block in blocks)
    return QuotientDigraph(g, h, blocks, tuple(block_of), iota, digraph)


def theta_class(g: Digraph, h_prime: Digraph, reference: QuotientDigraph) -> tuple[VertexMap, ...]:
    """All homomorphisms into h_prime that share the reference block partition.

    Partition equality suffices: the arcs of the block digraph are determined
    by the source and the partition.
    """
    out = []
    for zeta in HomSetHandle(g, h_prime, HomMode.ALL):
        if map_partition(g, zeta) == reference.blocks:
            out.append(zeta)
    return tuple(out)


def transitive_quotient(q: QuotientDigraph) -> Digraph:
    """Transitive hull of the block digraph.

    When source and target are posets (or strict posets), the hull is one
    again; this is asserted because downstream poset-kind machinery relies
    on it.
    """
    hull = transitive_hull(q.digraph)
    for kind in (ClassKind.POSETS, ClassKind.STRICT_POSETS):
        if satisfies_kind(q.source, kind) and satisfies_kind(q.target, kind):
            assert satisfies_kind(hull, kind)
    return hull


# -- walk predicates of the block digraph ------------------------------------
#
# Reachability matrices decide the walk statements for every length at once,
# so both checks are exact rather than bounded enumerations.


def walks_between_equal_images_trivial(q: QuotientDigraph) -> bool:
    """No nontrivial walk of the block digraph joins blocks with equal image.

    Equivalent matrix form: the loop-removed block digraph is acyclic, and no
    pair of distinct blocks with equal embedding image is connected by a walk.
    Holds whenever the target's loop-removed part is acyclic.
    """
    d = q.digraph
    if not satisfies_kind(d, ClassKind.PROPER_ACYCLIC):
        return False
    hull = transitive_hull(d)
    for a in range(d.n):
        for b in range(d.n):
            if a != b and q.iota[a] == q.iota[b] and hull.has_arc(a, b):
                return False
    return True


@lru_cache(maxsize=1 << 16)
def _odd_reachability(star: Digraph) -> tuple[tuple[bool, ...], ...]:
    """odd[a][b]: some odd-length walk joins a to b.  Fixpoint over the
    mutual odd/even recursion; terminates because both matrices only grow."""
    n = star.n
    adj = [[star.has_arc(a, b) for b in range(n)] for a in range(n)]
    odd = [row[:] for row in adj]
    even = [[False] * n for _ in range(n)]
    changed = True
    while changed:
        changed = False
        for a in range(n):
            for c in range(n):
                if adj[a][c]:
                    for b in range(n):
                        if odd[c][b] and not even[a][b]:
                            even[a][b] = True
                            changed = True
                        if even[c][b] and not odd[a][b]:
                            odd[a][b] = True
                            changed = True
    return tuple(tuple(row) for row in odd)


def no_odd_walks_between_equal_images(q: QuotientDigraph) -> bool:
    """No odd-length walk of the loop-removed block digraph joins blocks with
    equal image (including closed walks).  Holds for symmetric targets whose
    loop-removed part has no odd cycle."""
    from .digraph import loops_removed

    odd = _odd_reachability(loops_removed(q.digraph))
    n = q.digraph.n
    for a in range(n):
        for b in range(n):
            if q.iota[a] == q.iota[b] and odd[a][b]:
                return False
    return True
