"""Arc rearrangement: detach a vertex set from its anchor and re-attach its
arcs at the image of a bijection.

Given a digraph R with disjoint sets X and M, a set Y not adjacent to M, and
a bijective homomorphism beta from the restriction to X onto the restriction
to Y, every arc between M and X is replaced by the corresponding arc between
M and beta's image.  The resulting digraph S never has fewer strict
homomorphisms from any test digraph, which is what the relocation map and
its inversion formula certify constructively.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations

from .connectivity import is_convex, reachable_set
from .digraph import (
    Arc,
    ClassKind,
    Digraph,
    from_undirected_edges,
    edges_of,
    satisfies_kind,
    transitive_hull,
)
from .errors import InvalidSpec, NotAWalk, NotStrictHom, NotSymmetric
from .homs import HomMode, VertexMap, is_homomorphism


@dataclass(frozen=True)
class RearrangementSpec:
    """The data of a rearrangement: (R, X, Y, M, beta).

    x_set: vertices whose arcs to/from m_set are re-routed.
    y_set: the receiving set; must be exactly beta's image.
    m_set: the fixed endpoints of the re-routed arcs.
    beta: pairs (x, beta(x)).
    """

    graph: Digraph
    x_set: tuple[int, ...]
    y_set: tuple[int, ...]
    m_set: tuple[int, ...]
    beta: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.graph.n
        for name, vals in (("X", self.x_set), ("Y", self.y_set), ("M", self.m_set)):
            vals = tuple(sorted({int(v) for v in vals}))
            if any(not 0 <= v < n for v in vals):
                raise ValueError(f"{name} contains vertices out of range for n={n}")
            object.__setattr__(self, {"X": "x_set", "Y": "y_set", "M": "m_set"}[name], vals)
        pairs = tuple(sorted((int(a), int(b)) for a, b in self.beta))
        if any(not (0 <= a < n and 0 <= b < n) for a, b in pairs):
            raise ValueError(f"beta pairs out of range for n={n}")
        object.__setattr__(self, "beta", pairs)

    @cached_property
    def beta_map(self) -> dict[int, int]:
        return dict(self.beta)

    @cached_property
    def beta_inverse(self) -> dict[int, int]:
        return {b: a for a, b in self.beta}

    def to_json_dict(self) -> dict:
        return {
            "R": self.graph.to_json_dict(),
            "X": list(self.x_set),
            "Y": list(self.y_set),
            "M": list(self.m_set),
            "beta": [[a, b] for a, b in self.beta],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RearrangementSpec":
        return cls(
            Digraph.from_json_dict(data["R"]),
            tuple(data["X"]),
            tuple(data["Y"]),
            tuple(data["M"]),
            tuple((a, b) for a, b in data["beta"]),
        )

    @classmethod
    def loads(cls, text: str) -> "RearrangementSpec":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class ValidationReport:
    """Violated conditions of a rearrangement; empty means valid."""

    poset_mode: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_spec(spec: RearrangementSpec, poset_mode: bool = False) -> ValidationReport:
    """Check all validity conditions; violations are data, not exceptions.

    Base conditions: the set disjointness/adjacency requirements, beta being
    a bijective homomorphism between the induced restrictions, and the
    neighborhood coverage of every moved vertex outside the anchor.  Poset
    mode adds: the base digraph is a poset, the moved set is convex, and no
    walk joins the anchor and the receiving set in either direction.
    """
    r = spec.graph
    x_set, y_set, m_set = set(spec.x_set), set(spec.y_set), set(spec.m_set)
    beta = spec.beta_map
    violations: list[str] = []

    if x_set & m_set:
        violations.append(f"x_m_overlap({sorted(x_set & m_set)})")
    if m_set & y_set:
        violations.append(f"m_y_overlap({sorted(m_set & y_set)})")
    for y in sorted(y_set):
        hit = m_set & set(r.neighbors(y))
        if hit:
            violations.append(f"m_adjacent_to_y(y={y},m={sorted(hit)})")

    if set(beta) != x_set:
        violations.append("beta_domain")
    else:
        images = list(beta[x] for x in spec.x_set)
        if len(set(images)) != len(images) or set(images) != y_set:
            violations.append("beta_not_bijective_onto_y")
        else:
            for a, b in r.arcs:
                if a in x_set and b in x_set and not r.has_arc(beta[a], beta[b]):
                    violations.append(f"beta_not_homomorphism(arc={a}{b})")
            for x in spec.x_set:
                bx = beta[x]
                if set(r.in_neighbors(x)) - m_set - set(r.in_neighbors(bx)):
                    violations.append(f"in_neighborhood_not_covered(x={x})")
                if set(r.out_neighbors(x)) - m_set - set(r.out_neighbors(bx)):
                    violations.append(f"out_neighborhood_not_covered(x={x})")

    if poset_mode:
        if not satisfies_kind(r, ClassKind.POSETS):
            violations.append("base_not_poset")
        if not is_convex(r, x_set):
            violations.append("x_not_convex")
        if m_set and y_set:
            from_m = set(reachable_set(r, m_set))
            if from_m & y_set:
                violations.append("walk_from_m_to_y")
            from_y = set(reachable_set(r, y_set))
            if from_y & m_set:
                violations.append("walk_from_y_to_m")
    return ValidationReport(poset_mode, tuple(violations))


@dataclass(frozen=True)
class RearrangementResult:
    """The rearranged digraph with its arc partition.

    retained: arcs of R not between M and X.
    moved_into: replacement arcs from M into the image set.
    moved_out: replacement arcs from the image set into M.
    """

    spec: RearrangementSpec
    s: Digraph
    retained: tuple[Arc, ...]
    moved_into: tuple[Arc, ...]
    moved_out: tuple[Arc, ...]

    @cached_property
    def _class_of(self) -> dict[Arc, str]:
        table: dict[Arc, str] = {}
        for arc in self.retained:
            table[arc] = "r"
        for arc in self.moved_into:
            table[arc] = "d"
        for arc in self.moved_out:
            table[arc] = "u"
        return table

    def arc_class(self, arc: Arc) -> str | None:
        return self._class_of.get(arc)

    def to_json_dict(self) -> dict:
        return {
            "S": self.s.to_json_dict(),
            "A_r": [list(a) for a in self.retained],
            "A_d": [list(a) for a in self.moved_into],
            "A_u": [list(a) for a in self.moved_out],
        }


def build_s(spec: RearrangementSpec) -> RearrangementResult:
    """Construct the rearranged digraph on the same vertex set."""
    report = validate_spec(spec, poset_mode=False)
    if not report.ok:
        raise InvalidSpec(report.violations)
    r = spec.graph
    x_set, m_set = set(spec.x_set), set(spec.m_set)
    beta = spec.beta_map
    retained = []
    moved_into = []
    moved_out = []
    for u, v in r.arcs:
        if u in m_set and v in x_set:
            moved_into.append((u, beta[v]))
        elif u in x_set and v in m_set:
            moved_out.append((beta[u], v))
        else:
            retained.append((u, v))
    s = Digraph(r.n, tuple(retained) + tuple(moved_into) + tuple(moved_out))
    return RearrangementResult(
        spec, s, tuple(sorted(retained)), tuple(sorted(moved_into)), tuple(sorted(moved_out))
    )


# -- the relocation map ---------------------------------------------------------


def exceptional_set(
    g: Digraph,
    f: VertexMap,
    side: str,
    spec: RearrangementSpec,
    result: RearrangementResult | None = None,
) -> tuple[int, ...]:
    """Vertices that the relocation map moves (or moved): image in the moved
    set (side "R") or in the receiving set (side "S"), with some neighbor
    mapped into the anchor."""
    if side not in ("R", "S"):
        raise ValueError("side must be 'R' or 'S'")
    if side == "R":
        target = spec.graph
        hot = set(spec.x_set)
    else:
        result = result or build_s(spec)
        target = result.s
        hot = set(spec.y_set)
    if not is_homomorphism(g, target, f, HomMode.STRICT):
        raise NotStrictHom(f"map is not a strict homomorphism into the {side}-side digraph")
    m_set = set(spec.m_set)
    out = []
    for v in range(g.n):
        if f.images[v] in hot and any(f.images[w] in m_set for w in g.neighbors(v)):
            out.append(v)
    return tuple(out)


def rho_apply(
    g: Digraph,
    xi: VertexMap,
    spec: RearrangementSpec,
    result: RearrangementResult | None = None,
) -> VertexMap:
    """Relocate a strict homomorphism into the rearranged digraph.

    Vertices in the exceptional set follow beta; everything else stays.  The
    output is a strict homomorphism into the result, and `rho_invert`
    recovers the input exactly.
    """
    result = result or build_s(spec)
    moved = set(exceptional_set(g, xi, "R", spec, result))
    beta = spec.beta_map
    images = tuple(
        beta[xi.images[v]] if v in moved else xi.images[v] for v in range(g.n)
    )
    return VertexMap(g.n, result.s.n, images)


def rho_invert(
    g: Digraph,
    zeta: VertexMap,
    spec: RearrangementSpec,
    result: RearrangementResult | None = None,
) -> VertexMap:
    """Inversion formula: pull exceptional vertices back through beta."""
    result = result or build_s(spec)
    moved = set(exceptional_set(g, zeta, "S", spec, result))
    inv = spec.beta_inverse
    images = tuple(
        inv[zeta.images[v]] if v in moved else zeta.images[v] for v in range(g.n)
    )
    return VertexMap(g.n, spec.graph.n, images)


# -- poset and undirected specializations -----------------------------------------


def poset_rearrange(spec: RearrangementSpec) -> tuple[RearrangementResult, Digraph]:
    """Rearrange a poset; returns the result and the transitive hull.

    Requires the full poset-mode conditions.  The raw result always has an
    acyclic proper part and keeps every loop, so its hull is a poset again.
    """
    report = validate_spec(spec, poset_mode=True)
    if not report.ok:
        raise InvalidSpec(report.violations)
    result = build_s(spec)
    hull = transitive_hull(result.s)
    assert satisfies_kind(result.s, ClassKind.PROPER_ACYCLIC)
    assert satisfies_kind(hull, ClassKind.POSETS)
    return result, hull


@dataclass(frozen=True)
class WalkReport:
    """Arc classes along a walk of the rearranged digraph.

    k_indices are the 1-based positions of steps outside the retained arcs;
    at most two can occur, and when exactly two do, the first is an arc into
    the receiving set and the second an arc out of it.
    """

    walk: tuple[int, ...]
    step_classes: tuple[str, ...]
    k_indices: tuple[int, ...]

    @property
    def bound_ok(self) -> bool:
        return len(self.k_indices) <= 2

    @property
    def shape_ok(self) -> bool:
        if len(self.k_indices) != 2:
            return True
        first, second = self.k_indices
        return (
            self.step_classes[first - 1] == "d" and self.step_classes[second - 1] == "u"
        )

    @property
    def ok(self) -> bool:
        return self.bound_ok and self.shape_ok


def walk_k_analysis(result: RearrangementResult, walk: tuple[int, ...]) -> WalkReport:
    """Classify each step of a walk in the rearranged digraph."""
    if not walk:
        raise NotAWalk("a walk has at least one vertex")
    if any(not 0 <= v < result.s.n for v in walk):
        raise NotAWalk(f"walk {walk} has vertices out of range")
    classes = []
    for i in range(1, len(walk)):
        cls = result.arc_class((walk[i - 1], walk[i]))
        if cls is None:
            raise NotAWalk(f"step {walk[i - 1]}->{walk[i]} is not an arc of the result")
        classes.append(cls)
    k_indices = tuple(i + 1 for i, cls in enumerate(classes) if cls != "r")
    return WalkReport(tuple(walk), tuple(classes), k_indices)


def undirected_rearrange(spec: RearrangementSpec) -> Digraph:
    """Edge rearrangement of a symmetric digraph.

    Every edge meeting both the anchor and the moved set is replaced by its
    beta-translation; the result is symmetric.  Requires the undirected
    neighborhood condition (open neighborhoods outside the anchor are
    covered by the image's neighborhoods).
    """
    r = spec.graph
    if not r.is_symmetric:
        raise NotSymmetric("undirected rearrangement needs a symmetric digraph")
    # For a symmetric digraph the directed validity conditions coincide with
    # the undirected ones (in- and out-neighborhoods agree).
    report = validate_spec(spec, poset_mode=False)
    if not report.ok:
        raise InvalidSpec(report.violations)
    beta = spec.beta_map
    x_set, m_set = set(spec.x_set), set(spec.m_set)
    new_edges = []
    for edge in edges_of(r):
        ends = set(edge)
        if ends & m_set and ends & x_set:
            new_edges.append(tuple(sorted((ends & m_set) | {beta[x] for x in ends & x_set})))
        else:
            new_edges.append(edge)
    out = from_undirected_edges(r.n, new_edges)
    assert out.is_symmetric
    return out


# -- named examples and the sweep generator -----------------------------------------


def three_vertex_spec() -> RearrangementSpec:
    """Reflexive 3-vertex poset 0<1; the arc into 1 is re-routed to the
    isolated vertex 2."""
    r = Digraph(3, ((0, 0), (1, 1), (2, 2), (0, 1)))
    return RearrangementSpec(r, (1,), (2,), (0,), ((1, 2),))


def pentagon_spec() -> RearrangementSpec:
    """Five-vertex poset 0<1<3, 0<3, 2<3, 2<4 (reflexive); vertex 1 detaches
    from 0 and re-attaches at 2."""
    arcs = [(v, v) for v in range(5)] + [(0, 1), (1, 3), (0, 3), (2, 3), (2, 4)]
    r = Digraph(5, tuple(arcs))
    return RearrangementSpec(r, (1,), (2,), (0,), ((1, 2),))


def generate_specs(r: Digraph, max_moved: int = 2) -> tuple[RearrangementSpec, ...]:
    """All valid rearrangements of r with a small moved set.

    Enumerates nonempty moved sets up to max_moved vertices, nonempty
    disjoint anchors, and injective beta maps (the receiving set is always
    beta's image); keeps exactly the specs passing base validation.
    Deterministic order.
    """
    found = []
    verts = tuple(range(r.n))
    for size in range(1, max_moved + 1):
        for x_set in combinations(verts, size):
            rest = tuple(v for v in verts if v not in x_set)
            for m_size in range(1, len(rest) + 1):
                for m_set in combinations(rest, m_size):
                    m = set(m_set)
                    targets = tuple(v for v in verts if v not in m)
                    for images in permutations(targets, size):
                        spec = RearrangementSpec(
                            r,
                            x_set,
                            tuple(sorted(images)),
                            m_set,
                            tuple(zip(x_set, images)),
                        )
                        if validate_spec(spec).ok:
                            found.append(spec)
    return tuple(found)
