"""Dominance decision procedures on bounded digraph classes.

Everything here quantifies over an explicit finite ClassSpec truncation and
says so in its report: verdicts refute soundly and confirm only relative to
the truncation.  Sweeps parallelize across catalog members with results
merged in canonical order, so reports are byte-stable for any worker count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from ._parallel import parallel_map
from .catalog import canonical_form, canonical_relabel, generate
from .digraph import (
    ClassKind,
    ClassSpec,
    Digraph,
    direct_sum,
    ordinal_sum,
    satisfies_kind,
)
from .errors import ClassNotQuotientClosed, DominanceFails, GammahomError, PremiseFails
from .homs import HomMode, HomSetHandle, VertexMap, count_homs, is_homomorphism
from .quotient import quotient_of, transitive_quotient

_POSET_KINDS = (ClassKind.POSETS, ClassKind.STRICT_POSETS)
_QUOTIENT_CLOSED_KINDS = (
    ClassKind.ALL_DIGRAPHS,
    ClassKind.PROPER_ACYCLIC,
    ClassKind.POSETS,
    ClassKind.STRICT_POSETS,
)


@lru_cache(maxsize=1 << 18)
def _count_cached(g: Digraph, h: Digraph, mode: HomMode) -> int:
    return count_homs(g, h, mode)


# -- dominance sweeps ---------------------------------------------------------


@dataclass(frozen=True)
class DominanceReport:
    """Outcome of a count-dominance sweep over a bounded class.

    On failure the witness is the earliest catalog member (canonical order)
    with left count exceeding right count.  The optional table carries both
    strict and plain counts for every catalog member.
    """

    left: Digraph
    right: Digraph
    class_spec: ClassSpec
    mode: str
    holds: bool
    witness: Digraph | None = None
    witness_counts: tuple[int, int] | None = None
    table: tuple[tuple[tuple[int, int], tuple[int, int]], ...] | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "mode": self.mode,
            "class": self.class_spec.to_json_dict(),
            "left": self.left.to_json_dict(),
            "right": self.right.to_json_dict(),
            "holds": self.holds,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
            out["witness_counts"] = list(self.witness_counts)
        if self.table is not None:
            out["table"] = [
                {"strict": list(strict), "hom": list(hom)} for strict, hom in self.table
            ]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


def check_dominance(
    left: Digraph,
    right: Digraph,
    spec: ClassSpec,
    mode: HomMode = HomMode.STRICT,
    *,
    budget: int | None = None,
    workers: int = 1,
    with_table: bool = False,
) -> DominanceReport:
    """Count inequality left <= right over every representative of the class."""
    reps = generate(spec, budget=budget, workers=workers)
    pairs = parallel_map(
        lambda g: (_count_cached(g, left, mode), _count_cached(g, right, mode)),
        reps,
        workers,
    )
    witness = None
    witness_counts = None
    for g, (a, b) in zip(reps, pairs):
        if a > b:
            witness = g
            witness_counts = (a, b)
            break
    table = None
    if with_table:
        table = tuple(
            (
                (_count_cached(g, left, HomMode.STRICT), _count_cached(g, right, HomMode.STRICT)),
                (_count_cached(g, left, HomMode.ALL), _count_cached(g, right, HomMode.ALL)),
            )
            for g in reps
        )
    name = "strict-dominance" if mode is HomMode.STRICT else "hom-dominance"
    return DominanceReport(
        left, right, spec, name, witness is None, witness, witness_counts, table
    )


def check_strict_dominance(left, right, spec, **kwargs) -> DominanceReport:
    return check_dominance(left, right, spec, HomMode.STRICT, **kwargs)


def check_hom_dominance(left, right, spec, **kwargs) -> DominanceReport:
    return check_dominance(left, right, spec, HomMode.ALL, **kwargs)


# -- quotient closure and the block-preserving criterion ------------------------


#: Memo for quotient closures; results are worker-independent and immutable.
_CLOSURE_CACHE: dict = {}


def quotient_closure(
    target: Digraph,
    spec: ClassSpec,
    *,
    transitive_hulls: bool = False,
    budget: int | None = None,
    workers: int = 1,
) -> tuple[Digraph, ...]:
    """All quotient shapes of homomorphisms into `target`, up to isomorphism.

    Sweeps every catalog member of the class and every homomorphism from it.
    With transitive_hulls=True the hulls of the shapes are collected instead
    (the poset-kind variant).  Canonically labeled, ordered by (n, form).
    """
    reps = generate(spec, budget=budget, workers=workers)
    cache_key = (target, spec, transitive_hulls)
    cached = _CLOSURE_CACHE.get(cache_key)
    if cached is not None:
        return cached

    def shapes_for(g: Digraph) -> dict[tuple[int, int], Digraph]:
        found: dict[tuple[int, int], Digraph] = {}
        for xi in HomSetHandle(g, target, HomMode.ALL):
            shape = quotient_of(g, target, xi)
            base = transitive_quotient(shape) if transitive_hulls else shape.digraph
            key = canonical_form(base).key()
            if key not in found:
                found[key] = canonical_relabel(base)
        return found

    merged: dict[tuple[int, int], Digraph] = {}
    for chunk in parallel_map(shapes_for, reps, workers):
        for key, g in chunk.items():
            if key not in merged:
                merged[key] = g
    result = tuple(g for _, g in sorted(merged.items()))
    _CLOSURE_CACHE[cache_key] = result
    return result


def check_gamma_leq(
    left: Digraph,
    right: Digraph,
    spec: ClassSpec,
    *,
    budget: int | None = None,
    workers: int = 1,
) -> DominanceReport:
    """Decide block-preserving dominance via strict counts on quotient shapes.

    Sound because the chosen kinds keep quotient shapes inside the class:
    plain quotients for digraph kinds, transitive hulls for poset kinds.  The
    verdict is equivalent to the strict-count sweep over the same class.
    """
    if spec.kind not in _QUOTIENT_CLOSED_KINDS:
        raise ClassNotQuotientClosed(
            f"kind {spec.kind.value} is not supported for the quotient criterion"
        )
    if spec.kind is not ClassKind.ALL_DIGRAPHS and not satisfies_kind(left, spec.kind):
        raise ClassNotQuotientClosed(
            f"left digraph must belong to {spec.kind.value} for its quotient "
            "shapes to stay inside the class"
        )
    hulls = spec.kind in _POSET_KINDS
    shapes = quotient_closure(
        left, spec, transitive_hulls=hulls, budget=budget, workers=workers
    )
    pairs = parallel_map(
        lambda g: (_count_cached(g, left, HomMode.STRICT), _count_cached(g, right, HomMode.STRICT)),
        shapes,
        workers,
    )
    witness = None
    witness_counts = None
    for g, (a, b) in zip(shapes, pairs):
        if a > b:
            witness = g
            witness_counts = (a, b)
            break
    return DominanceReport(
        left, right, spec, "gamma-leq", witness is None, witness, witness_counts
    )


# -- scheme assembly -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SchemeAssembly:
    """Injective strict-map tables per quotient shape, assembled into a scheme.

    For each shape the i-th strict map into `left` (lexicographic order) is
    paired with the i-th into `right`; `apply` routes a homomorphism through
    its quotient to produce an injective, block-preserving image map.
    """

    left: Digraph
    right: Digraph
    class_spec: ClassSpec
    uses_hulls: bool
    tables: dict

    def apply(self, g: Digraph, xi: VertexMap) -> VertexMap:
        from .errors import NotAHomomorphism

        if not is_homomorphism(g, self.left, xi, HomMode.ALL):
            raise NotAHomomorphism("scheme applies to homomorphisms into its left digraph")
        shape = quotient_of(g, self.left, xi)
        base = transitive_quotient(shape) if self.uses_hulls else shape.digraph
        form = canonical_form(base)
        table = self.tables.get(form.key())
        if table is None:
            raise GammahomError(
                "quotient shape not covered by the assembly; the source digraph "
                f"must belong to {self.class_spec.describe()}"
            )
        to_canon = form.perm
        embed = [0] * base.n
        for block_idx in range(base.n):
            embed[to_canon[block_idx]] = shape.iota[block_idx]
        paired = table[tuple(embed)]
        images = tuple(paired[to_canon[shape.block_of[v]]] for v in range(g.n))
        return VertexMap(g.n, self.right.n, images)


def assemble_scheme(
    left: Digraph,
    right: Digraph,
    spec: ClassSpec,
    *,
    budget: int | None = None,
    workers: int = 1,
) -> SchemeAssembly:
    """Build the per-shape injection tables; the dominance must hold first."""
    report = check_gamma_leq(left, right, spec, budget=budget, workers=workers)
    if not report.holds:
        raise DominanceFails(
            f"strict counts fail on shape {report.witness!r}: {report.witness_counts}"
        )
    hulls = spec.kind in _POSET_KINDS
    shapes = quotient_closure(
        left, spec, transitive_hulls=hulls, budget=budget, workers=workers
    )
    tables: dict = {}
    for shape in shapes:
        into_left = HomSetHandle(shape, left, HomMode.STRICT).maps
        into_right = HomSetHandle(shape, right, HomMode.STRICT).maps
        assert len(into_left) <= len(into_right)
        tables[canonical_form(shape).key()] = {
            a.images: b.images for a, b in zip(into_left, into_right)
        }
    return SchemeAssembly(left, right, spec, hulls, tables)


# -- vectors and distinguishing -------------------------------------------------


def hom_vector(
    target: Digraph,
    spec: ClassSpec,
    mode: HomMode = HomMode.ALL,
    *,
    budget: int | None = None,
    workers: int = 1,
) -> tuple[int, ...]:
    """Counts into `target` over the catalog in canonical order."""
    reps = generate(spec, budget=budget, workers=workers)
    return tuple(parallel_map(lambda g: _count_cached(g, target, mode), reps, workers))


@dataclass(frozen=True)
class DistinguishEntry:
    first: int
    second: int
    distinguished: bool
    witness_index: int | None


@dataclass(frozen=True)
class DistinguishReport:
    object_spec: ClassSpec
    test_spec: ClassSpec
    mode: HomMode
    entries: tuple[DistinguishEntry, ...]

    @property
    def all_distinguished(self) -> bool:
        return all(e.distinguished for e in self.entries)

    @property
    def undistinguished(self) -> tuple[DistinguishEntry, ...]:
        return tuple(e for e in self.entries if not e.distinguished)

    def to_json_dict(self) -> dict:
        return {
            "objects": self.object_spec.to_json_dict(),
            "tests": self.test_spec.to_json_dict(),
            "mode": self.mode.value,
            "all_distinguished": self.all_distinguished,
            "pairs": [
                {
                    "first": e.first,
                    "second": e.second,
                    "distinguished": e.distinguished,
                    "witness_index": e.witness_index,
                }
                for e in self.entries
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


def lovasz_distinguish(
    object_spec: ClassSpec,
    test_spec: ClassSpec,
    mode: HomMode = HomMode.ALL,
    *,
    object_budget: int | None = None,
    test_budget: int | None = None,
    workers: int = 1,
) -> DistinguishReport:
    """Check that count vectors separate every non-isomorphic object pair.

    Objects are catalog representatives, hence pairwise non-isomorphic; for
    each unordered pair the earliest test digraph with differing counts is
    reported.
    """
    objects = generate(object_spec, budget=object_budget, workers=workers)
    vectors = parallel_map(
        lambda h: hom_vector(h, test_spec, mode, budget=test_budget),
        objects,
        workers,
    )
    entries = []
    for i in range(len(objects)):
        for j in range(i + 1, len(objects)):
            witness = None
            for k, (a, b) in enumerate(zip(vectors[i], vectors[j])):
                if a != b:
                    witness = k
                    break
            entries.append(DistinguishEntry(i, j, witness is not None, witness))
    return DistinguishReport(object_spec, test_spec, mode, tuple(entries))


# -- sum compatibility ------------------------------------------------------------


def sum_compatibility_check(
    r1: Digraph,
    s1: Digraph,
    r2: Digraph,
    s2: Digraph,
    spec: ClassSpec,
    *,
    budget: int | None = None,
    workers: int = 1,
) -> bool:
    """Verify that dominance survives the sum operation, by direct counting.

    Premise dominances must hold over the class; the conclusion is checked
    for the ordinal sum on the poset kind and the direct sum otherwise.
    """
    for a, b in ((r1, s1), (r2, s2)):
        premise = check_strict_dominance(a, b, spec, budget=budget, workers=workers)
        if not premise.holds:
            raise PremiseFails(
                f"premise {a!r} <= {b!r} fails at witness {premise.witness!r}"
            )
    if spec.kind is ClassKind.POSETS:
        left, right = ordinal_sum(r1, r2), ordinal_sum(s1, s2)
    else:
        left, right = direct_sum(r1, r2), direct_sum(s1, s2)
    conclusion = check_strict_dominance(left, right, spec, budget=budget, workers=workers)
    return conclusion.holds
