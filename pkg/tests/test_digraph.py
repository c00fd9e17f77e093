import json

import pytest
from hypothesis import given, settings

import gammahom as gh
from gammahom import ClassKind, ClassSpec, Digraph
from gammahom.errors import EmptyInducedSet, NotAPoset, NotSymmetric

from helpers import A1, A2R, C2, CHAIN3, D
from oracles import brute_hull_arcs
from strategies import digraphs


class TestConstruction:
    def test_rejects_empty_vertex_set(self):
        with pytest.raises(ValueError):
            Digraph(0)

    def test_rejects_oversized(self):
        with pytest.raises(ValueError):
            Digraph(65)

    def test_rejects_out_of_range_arcs(self):
        with pytest.raises(ValueError):
            Digraph(2, ((0, 2),))

    def test_arcs_normalized_sorted_deduped(self):
        g = Digraph(3, ((2, 1), (0, 1), (2, 1)))
        assert g.arcs == ((0, 1), (2, 1))

    def test_neighborhoods_exclude_self(self):
        g = D(2, "00", "01")
        assert g.successors(0) == (0, 1)
        assert g.out_neighbors(0) == (1,)
        assert g.neighbors(0) == (1,)
        assert g.in_neighbors(1) == (0,)


class TestLoopsRemoved:
    def test_strips_diagonal(self):
        assert gh.loops_removed(D(2, "00", "11", "01")) == D(2, "01")

    def test_idempotent(self):
        assert gh.loops_removed(D(2, "01")) == D(2, "01")

    def test_single_loop(self):
        assert gh.loops_removed(D(1, "00")) == D(1)


class TestTransitiveHull:
    def test_single_composition(self):
        assert gh.transitive_hull(D(3, "01", "12")) == D(3, "01", "12", "02")

    def test_fixed_point_on_transitive(self):
        assert gh.transitive_hull(CHAIN3) == CHAIN3

    def test_two_cycle_forces_loops(self):
        # Derived by the walk-reachability oracle: closed walks 0,1,0 and
        # 1,0,1 put both loops into the hull.
        g = D(2, "01", "10")
        expected = set(brute_hull_arcs(g))
        assert expected == {(0, 0), (0, 1), (1, 0), (1, 1)}
        assert set(gh.transitive_hull(g).arcs) == expected

    @settings(max_examples=150, deadline=None)
    @given(digraphs(max_n=5))
    def test_matches_reachability_oracle(self, g):
        assert set(gh.transitive_hull(g).arcs) == brute_hull_arcs(g)

    @settings(max_examples=100, deadline=None)
    @given(digraphs(max_n=5))
    def test_idempotent_and_monotone(self, g):
        hull = gh.transitive_hull(g)
        assert set(g.arcs) <= set(hull.arcs)
        assert gh.transitive_hull(hull) == hull

    @settings(max_examples=100, deadline=None)
    @given(digraphs(max_n=5))
    def test_preserves_reflexivity_and_proper_acyclic(self, g):
        if g.is_reflexive:
            assert gh.transitive_hull(g).is_reflexive
        if gh.satisfies_kind(g, ClassKind.PROPER_ACYCLIC):
            assert gh.satisfies_kind(gh.transitive_hull(g), ClassKind.PROPER_ACYCLIC)


class TestClassMembership:
    def test_chain_is_poset(self):
        assert gh.is_member(C2, ClassSpec(ClassKind.POSETS, 2))

    def test_two_cycle_not_proper_acyclic(self):
        assert not gh.is_member(D(2, "01", "10"), ClassSpec(ClassKind.PROPER_ACYCLIC, 2))

    def test_symmetric_triangle_has_odd_cycle(self):
        # The proper part is a triangle: odd closed walk found by 2-coloring.
        g = D(3, "01", "10", "12", "21", "02", "20")
        assert not gh.is_member(g, ClassSpec(ClassKind.ODD_CYCLE_FREE, 3))
        assert gh.is_member(g, ClassSpec(ClassKind.UNDIRECTED, 3))

    def test_size_bounds(self):
        assert not gh.is_member(C2, ClassSpec(ClassKind.POSETS, 1))
        assert not gh.is_member(C2, ClassSpec(ClassKind.POSETS, 2, max_arcs=2))

    def test_strict_poset_iff_reflexive_closure_poset(self, digraphs3):
        strict = ClassSpec(ClassKind.STRICT_POSETS, 3)
        posets = ClassSpec(ClassKind.POSETS, 3)
        for g in digraphs3:
            expected = g.is_irreflexive and gh.is_member(gh.reflexive_closure(g), posets)
            assert gh.is_member(g, strict) == expected

    def test_posets_inside_proper_acyclic(self, posets4):
        for p in posets4:
            assert gh.satisfies_kind(p, ClassKind.PROPER_ACYCLIC)
            assert gh.satisfies_kind(gh.loops_removed(p), ClassKind.PROPER_ACYCLIC)


class TestInduced:
    def test_chain_endpoints(self):
        assert gh.induced(CHAIN3, (0, 2)) == D(2, "00", "11", "01")

    def test_full_set_is_identity(self):
        assert gh.induced(CHAIN3, range(3)) == CHAIN3

    def test_empty_set_rejected(self):
        with pytest.raises(EmptyInducedSet):
            gh.induced(CHAIN3, ())


class TestSums:
    def test_direct_sum_of_points(self):
        assert gh.direct_sum(A1, A1) == D(2, "00", "11")

    def test_direct_sum_counts_add(self):
        g, h = CHAIN3, C2
        total = gh.direct_sum(g, h)
        assert total.n == g.n + h.n
        assert len(total.arcs) == len(g.arcs) + len(h.arcs)
        assert len(gh.components(total)) == len(gh.components(g)) + len(gh.components(h))

    def test_ordinal_sum_of_chains_is_chain(self):
        out = gh.ordinal_sum(C2, C2)
        assert gh.satisfies_kind(out, ClassKind.POSETS)
        assert out.is_transitive
        # 4-chain: every pair u <= v related
        assert all(out.has_arc(u, v) for u in range(4) for v in range(u, 4))

    def test_ordinal_sum_of_points(self):
        assert gh.ordinal_sum(A1, A1) == C2

    def test_ordinal_sum_rejects_non_poset(self):
        with pytest.raises(NotAPoset):
            gh.ordinal_sum(D(2, "01"), A1)

    def test_sums_associative_up_to_isomorphism(self):
        a, b, c = A1, C2, A2R
        assert gh.is_isomorphic(
            gh.direct_sum(gh.direct_sum(a, b), c), gh.direct_sum(a, gh.direct_sum(b, c))
        )
        assert gh.is_isomorphic(
            gh.ordinal_sum(gh.ordinal_sum(a, b), c), gh.ordinal_sum(a, gh.ordinal_sum(b, c))
        )


class TestUndirectedRepresentation:
    def test_edge_ingestion(self):
        assert gh.from_undirected_edges(2, [(0, 1)]) == D(2, "01", "10")

    def test_loop_edge(self):
        assert gh.from_undirected_edges(1, [(0,)]) == D(1, "00")

    def test_underlying_rejects_asymmetric(self):
        with pytest.raises(NotSymmetric):
            gh.underlying(D(2, "01"))

    def test_underlying_is_identity_on_symmetric(self):
        g = gh.from_undirected_edges(3, [(0, 1), (1, 2)])
        assert gh.underlying(g) is g

    def test_symmetric_closure_view(self):
        assert gh.symmetric_closure_view(D(2, "01")) == D(2, "01", "10")

    def test_edges_round_trip(self):
        g = gh.from_undirected_edges(3, [(0, 1), (2,)])
        assert gh.edges_of(g) == ((0, 1), (2,))


class TestSerialization:
    def test_json_round_trip_sorted(self):
        g = D(3, "21", "01", "00")
        data = json.loads(g.dumps())
        assert data["arcs"] == [[0, 0], [0, 1], [2, 1]]
        assert Digraph.from_json_dict(data) == g

    def test_dot_renders_loops(self):
        dot = gh.to_dot(D(1, "00"))
        assert "0 -> 0;" in dot

    def test_dot_hasse_uses_covers(self):
        dot = gh.to_dot(CHAIN3, hasse=True)
        assert "0 -> 1;" in dot and "1 -> 2;" in dot
        assert "0 -> 2;" not in dot and "0 -> 0;" not in dot

    def test_dot_hasse_rejects_non_poset(self):
        with pytest.raises(NotAPoset):
            gh.to_dot(D(2, "01"), hasse=True)


class TestCovers:
    def test_chain_covers(self):
        assert gh.covering_arcs(CHAIN3) == ((0, 1), (1, 2))

    def test_antichain_has_no_covers(self):
        assert gh.covering_arcs(A2R) == ()
