"""Connectivity inside vertex subsets, pre-image components, and convexity.

Lines ignore arc direction: two vertices are adjacent when an arc joins them
either way, and loops never make a vertex adjacent to itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TYPE_CHECKING

from .digraph import Digraph
from .errors import NotAHomomorphism, VertexNotInSubset

if TYPE_CHECKING:
    from .homs import VertexMap


@dataclass(frozen=True)
class ComponentMap:
    """Partition of a vertex subset into its connectivity blocks.

    Blocks are sorted internally and listed by smallest member; every vertex
    of the subset appears in exactly one block.
    """

    base: Digraph
    subset: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def block_of(self, v: int) -> tuple[int, ...]:
        for block in self.blocks:
            if v in block:
                return block
        raise VertexNotInSubset(f"vertex {v} not in subset {self.subset}")


def gamma(g: Digraph, subset: Iterable[int], v: int) -> tuple[int, ...]:
    """Vertices of the subset connected to v by a line running inside it.

    Breadth-first search over open neighborhoods restricted to the subset;
    the result always contains v itself.
    """
    members = set(subset)
    if not members <= set(range(g.n)):
        raise ValueError(f"subset {sorted(members)} out of range for n={g.n}")
    if v not in members:
        raise VertexNotInSubset(f"vertex {v} not in subset {sorted(members)}")
    seen = {v}
    frontier = [v]
    while frontier:
        u = frontier.pop()
        for w in g.neighbors(u):
            if w in members and w not in seen:
                seen.add(w)
                frontier.append(w)
    return tuple(sorted(seen))


def component_map(g: Digraph, subset: Iterable[int]) -> ComponentMap:
    """All connectivity blocks of a subset, as a partition."""
    members = tuple(sorted(set(subset)))
    blocks = []
    assigned: set[int] = set()
    for v in members:
        if v in assigned:
            continue
        block = gamma(g, members, v)
        assigned.update(block)
        blocks.append(block)
    return ComponentMap(g, members, tuple(blocks))


def components(g: Digraph) -> tuple[tuple[int, ...], ...]:
    """Connectivity components of the whole digraph."""
    return component_map(g, range(g.n)).blocks


def gamma_component(g: Digraph, f: "VertexMap", v: int) -> tuple[int, ...]:
    """Connectivity component of v inside the pre-image of its own image."""
    _check_arity(g, f)
    target = f.images[v]
    preimage = tuple(u for u in range(g.n) if f.images[u] == target)
    return gamma(g, preimage, v)


def map_partition(g: Digraph, f: "VertexMap") -> tuple[tuple[int, ...], ...]:
    """The partition of all vertices into pre-image components, by smallest member.

    Two maps induce the same quotient exactly when these partitions agree.
    """
    _check_arity(g, f)
    blocks = []
    assigned: set[int] = set()
    for v in range(g.n):
        if v in assigned:
            continue
        block = gamma_component(g, f, v)
        assigned.update(block)
        blocks.append(block)
    return tuple(blocks)


def is_convex(g: Digraph, subset: Iterable[int]) -> bool:
    """True iff every walk starting and ending in the subset stays inside it.

    Equivalent reachability form: no outside vertex is both reachable from
    the subset and able to reach it.
    """
    members = set(subset)
    if not members <= set(range(g.n)):
        raise ValueError(f"subset {sorted(members)} out of range for n={g.n}")
    reach_from = _closure(g, members, forward=True)
    reach_to = _closure(g, members, forward=False)
    return not ((reach_from & reach_to) - members)


def _closure(g: Digraph, start: set[int], forward: bool) -> set[int]:
    seen = set(start)
    frontier = list(start)
    while frontier:
        v = frontier.pop()
        nxt = g.successors(v) if forward else g.predecessors(v)
        for w in nxt:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def reachable_set(g: Digraph, start: Iterable[int]) -> tuple[int, ...]:
    """Vertices reachable from the start set by walks of any length >= 0."""
    return tuple(sorted(_closure(g, set(start), forward=True)))


def gamma_monotone_check(
    g: Digraph,
    h: Digraph,
    h_prime: Digraph,
    xi: "VertexMap",
    sigma: "VertexMap",
) -> bool:
    """Self-test predicate for composition behavior of pre-image components.

    Checks that every component of xi is contained in the matching component
    of sigma o xi, and that equality holds everywhere whenever sigma is
    strict on the image of xi.
    """
    from .homs import HomMode, compose, is_homomorphism

    if not is_homomorphism(g, h, xi, HomMode.ALL):
        raise NotAHomomorphism("first map is not a homomorphism")
    if not is_homomorphism(h, h_prime, sigma, HomMode.ALL):
        raise NotAHomomorphism("second map is not a homomorphism")
    composed = compose(sigma, xi)
    image = set(xi.images)
    sigma_strict_on_image = all(
        sigma.images[a] != sigma.images[b]
        for a, b in h.proper_arcs
        if a in image and b in image
    )
    for v in range(g.n):
        inner = set(gamma_component(g, xi, v))
        outer = set(gamma_component(g, composed, v))
        if not inner <= outer:
            return False
        if sigma_strict_on_image and inner != outer:
            return False
    return True


def _check_arity(g: Digraph, f: "VertexMap") -> None:
    from .errors import ArityMismatch

    if f.domain != g.n:
        raise ArityMismatch(f"map domain {f.domain} does not match n={g.n}")
