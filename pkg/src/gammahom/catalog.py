"""Canonical forms, isomorphism testing, and representative-system generation.

Canonical forms are exact: the lexicographically minimal adjacency bit string
over all vertex permutations.  That limits instances to n <= 8, which covers
every desk-scale verification target.  Catalogs list exactly one canonically
labeled representative per isomorphism class, ordered by (n, form).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import permutations

from ._parallel import parallel_map
from .digraph import ClassKind, ClassSpec, Digraph, is_member, relabel, satisfies_kind
from .errors import BoundTooLarge, TooLarge

#: Permutation exhaustion is 8! at most.
CANON_MAX = 8

#: Default generation budgets per kind; GAMMAHOM_MAX_N raises them (up to the
#: hard caps), an explicit `budget=` argument overrides both.
DEFAULT_BUDGETS: dict[ClassKind, int] = {
    ClassKind.ALL_DIGRAPHS: 3,
    ClassKind.PROPER_ACYCLIC: 3,
    ClassKind.POSETS: 5,
    ClassKind.STRICT_POSETS: 5,
    ClassKind.UNDIRECTED: 4,
    ClassKind.ODD_CYCLE_FREE: 4,
}

#: Hard caps; exceeding them is an error, never silent truncation.
HARD_CAPS: dict[ClassKind, int] = {
    ClassKind.ALL_DIGRAPHS: 4,
    ClassKind.PROPER_ACYCLIC: 4,
    ClassKind.POSETS: 6,
    ClassKind.STRICT_POSETS: 6,
    ClassKind.UNDIRECTED: 5,
    ClassKind.ODD_CYCLE_FREE: 5,
}


@dataclass(frozen=True)
class CanonicalForm:
    """Exact isomorphism invariant: minimal adjacency bit string.

    Two digraphs are isomorphic iff their forms compare equal.  The witness
    permutation (original label -> canonical label) is carried along but does
    not participate in comparisons; it is the lexicographically smallest
    permutation achieving the minimum.
    """

    n: int
    code: int
    perm: tuple[int, ...] = field(compare=False)

    def key(self) -> tuple[int, int]:
        return (self.n, self.code)


def _encode(n: int, arcs, perm) -> int:
    code = 0
    for u, v in arcs:
        code |= 1 << (perm[u] * n + perm[v])
    return code


def canonical_form(g: Digraph) -> CanonicalForm:
    if g.n > CANON_MAX:
        raise TooLarge(f"canonical forms need n <= {CANON_MAX}, got {g.n}")
    best_code = None
    best_perm = None
    for perm in permutations(range(g.n)):
        code = _encode(g.n, g.arcs, perm)
        if best_code is None or code < best_code:
            best_code = code
            best_perm = perm
    assert best_code is not None and best_perm is not None
    return CanonicalForm(g.n, best_code, best_perm)


def canonical_relabel(g: Digraph) -> Digraph:
    """The canonical representative of g's isomorphism class."""
    return relabel(g, canonical_form(g).perm)


def is_isomorphic(g: Digraph, h: Digraph) -> bool:
    if g.n != h.n or len(g.arcs) != len(h.arcs):
        return False
    return canonical_form(g) == canonical_form(h)


def _effective_budget(kind: ClassKind, budget: int | None) -> int:
    cap = HARD_CAPS[kind]
    if budget is not None:
        if budget > cap:
            raise BoundTooLarge(
                f"budget {budget} exceeds the hard cap {cap} for {kind.value}"
            )
        return budget
    env = os.environ.get("GAMMAHOM_MAX_N", "").strip()
    if env:
        return min(int(env), cap)
    return DEFAULT_BUDGETS[kind]


#: Memo for generated catalogs; safe because results are worker-independent
#: (merged in canonical order) and immutable.
_GENERATION_CACHE: dict = {}


def generate(spec: ClassSpec, budget: int | None = None, workers: int = 1) -> tuple[Digraph, ...]:
    """Deterministic representative system of a bounded class.

    Incremental extension: every class here is closed under induced
    subgraphs, so each representative on k vertices arises from one on k-1
    by adding the vertex k-1 with some arc pattern.  Results are canonically
    labeled, deduplicated by form, and ordered by (n, form).
    """
    allowed = _effective_budget(spec.kind, budget)
    if spec.max_vertices > allowed:
        raise BoundTooLarge(
            f"max_vertices {spec.max_vertices} exceeds the budget {allowed} "
            f"for {spec.kind.value} (pass an explicit budget or set GAMMAHOM_MAX_N)"
        )
    cached = _GENERATION_CACHE.get(spec)
    if cached is not None:
        return cached

    def keep(g: Digraph) -> bool:
        return is_member(g, spec)

    out: list[Digraph] = []
    level: dict[tuple[int, int], Digraph] = {}
    for arcs in ((), ((0, 0),)):
        g = Digraph(1, arcs)
        if satisfies_kind(g, spec.kind):
            level[canonical_form(g).key()] = canonical_relabel(g)
    out.extend(g for _, g in sorted(level.items()) if keep(g))

    for n in range(2, spec.max_vertices + 1):
        parents = [g for _, g in sorted(level.items())]
        chunks = parallel_map(lambda p: _extensions(p, n, spec.kind), parents, workers)
        level = {}
        for chunk in chunks:
            for key, g in chunk:
                if key not in level:
                    level[key] = g
        out.extend(g for _, g in sorted(level.items()) if keep(g))
    result = tuple(out)
    _GENERATION_CACHE[spec] = result
    return result


def _extensions(parent: Digraph, n: int, kind: ClassKind) -> list[tuple[tuple[int, int], Digraph]]:
    """All one-vertex extensions of a parent representative, canonicalized."""
    new = n - 1
    slots = [(old, new) for old in range(new)] + [(new, old) for old in range(new)] + [(new, new)]
    found: dict[tuple[int, int], Digraph] = {}
    for pattern in range(1 << len(slots)):
        arcs = parent.arcs + tuple(
            slots[i] for i in range(len(slots)) if pattern >> i & 1
        )
        g = Digraph(n, arcs)
        if not satisfies_kind(g, kind):
            continue
        key = canonical_form(g).key()
        if key not in found:
            found[key] = canonical_relabel(g)
    return sorted(found.items())


def catalog_index(reps: tuple[Digraph, ...]) -> dict[tuple[int, int], int]:
    """Position of each representative by canonical-form key."""
    return {canonical_form(g).key(): i for i, g in enumerate(reps)}
