import pytest

import gammahom as gh
from gammahom import ClassKind, ClassSpec, Digraph
from gammahom.catalog import catalog_index
from gammahom.errors import BoundTooLarge, TooLarge

from helpers import A2R, C2, CHAIN3, D, V3
from oracles import (
    all_labeled_digraphs,
    all_labeled_posets,
    all_labeled_symmetric,
    orbit_count,
)


class TestCanonicalForm:
    def test_relabelings_share_form(self):
        assert gh.canonical_form(D(2, "00", "11", "01")) == gh.canonical_form(
            D(2, "00", "11", "10")
        )

    def test_different_arc_counts_differ(self):
        assert gh.canonical_form(C2) != gh.canonical_form(A2R)

    def test_idempotent_on_canonical_relabel(self):
        g = D(3, "21", "10", "00")
        canon = gh.canonical_relabel(g)
        assert gh.canonical_form(canon) == gh.canonical_form(g)
        assert gh.canonical_relabel(canon) == canon

    def test_size_cap(self):
        with pytest.raises(TooLarge):
            gh.canonical_form(Digraph(9))


class TestIsIsomorphic:
    def test_permuted_copy(self):
        g = D(3, "01", "12")
        assert gh.is_isomorphic(g, gh.relabel(g, (2, 0, 1)))

    def test_chain_vs_v_shape(self):
        assert not gh.is_isomorphic(CHAIN3, V3)

    def test_pentagon_vs_its_hull(self):
        spec = gh.pentagon_spec()
        _, hull = gh.poset_rearrange(spec)
        assert not gh.is_isomorphic(spec.graph, hull)


class TestGenerateCounts:
    def test_posets_small(self, posets3):
        assert len(posets3) == 8  # 1 + 2 + 5

    def test_posets_four(self, posets4):
        assert len(posets4) == 24
        assert sum(1 for p in posets4 if p.n == 4) == 16

    def test_posets_five(self):
        reps = gh.generate(ClassSpec(ClassKind.POSETS, 5))
        assert sum(1 for p in reps if p.n == 5) == 63

    def test_single_vertex_digraphs(self):
        reps = gh.generate(ClassSpec(ClassKind.ALL_DIGRAPHS, 1))
        assert reps == (Digraph(1), Digraph(1, ((0, 0),)))

    def test_strict_posets_two(self):
        reps = gh.generate(ClassSpec(ClassKind.STRICT_POSETS, 2))
        assert len(reps) == 3  # point, bare pair, single arc
        assert sum(1 for g in reps if g.n == 2) == 2

    def test_digraphs_three(self, digraphs3):
        assert len(digraphs3) == 116  # 2 + 10 + 104

    def test_symmetric_four(self):
        reps = gh.generate(ClassSpec(ClassKind.UNDIRECTED, 4))
        assert len(reps) == 118  # 2 + 6 + 20 + 90


class TestAgainstOrbitOracle:
    def test_digraph_orbits_three(self, digraphs3):
        labeled = list(all_labeled_digraphs(3))
        assert len(labeled) == 512
        assert orbit_count(3, labeled) == 104
        assert sum(1 for g in digraphs3 if g.n == 3) == 104

    def test_poset_orbits_four(self, posets4):
        labeled = list(all_labeled_posets(4))
        assert len(labeled) == 219
        assert orbit_count(4, labeled) == 16

    def test_symmetric_orbits_four(self):
        assert orbit_count(4, all_labeled_symmetric(4)) == 90

    def test_proper_acyclic_orbits_three(self, proper_acyclic3):
        labeled = [
            arcs
            for arcs in all_labeled_digraphs(3)
            if gh.satisfies_kind(Digraph(3, tuple(arcs)), ClassKind.PROPER_ACYCLIC)
        ]
        assert orbit_count(3, labeled) == sum(1 for g in proper_acyclic3 if g.n == 3)

    def test_odd_cycle_free_orbits_three(self, odd_cycle_free4):
        labeled = [
            arcs
            for arcs in all_labeled_symmetric(3)
            if gh.satisfies_kind(Digraph(3, tuple(arcs)), ClassKind.ODD_CYCLE_FREE)
        ]
        assert orbit_count(3, labeled) == sum(1 for g in odd_cycle_free4 if g.n == 3)


class TestCatalogInvariants:
    def test_members_valid_and_pairwise_distinct(self, posets4):
        spec = ClassSpec(ClassKind.POSETS, 4)
        keys = set()
        for g in posets4:
            assert gh.is_member(g, spec)
            key = gh.canonical_form(g).key()
            assert key not in keys
            keys.add(key)

    def test_canonical_order(self, digraphs3):
        keys = [gh.canonical_form(g).key() for g in digraphs3]
        assert keys == sorted(keys)

    def test_strict_posets_are_stripped_posets(self, posets4):
        strict = gh.generate(ClassSpec(ClassKind.STRICT_POSETS, 4))
        stripped = {gh.canonical_form(gh.loops_removed(p)).key() for p in posets4}
        assert {gh.canonical_form(g).key() for g in strict} == stripped

    def test_quotient_closure_stays_in_catalog(self, proper_acyclic3, posets3):
        spec_ta = ClassSpec(ClassKind.PROPER_ACYCLIC, 3)
        index = catalog_index(proper_acyclic3)
        for r in proper_acyclic3:
            for shape in gh.quotient_closure(r, spec_ta):
                assert gh.canonical_form(shape).key() in index
        spec_p = ClassSpec(ClassKind.POSETS, 3)
        index_p = catalog_index(posets3)
        for r in posets3:
            for shape in gh.quotient_closure(r, spec_p, transitive_hulls=True):
                assert gh.canonical_form(shape).key() in index_p

    def test_odd_cycle_free_closure(self, odd_cycle_free4):
        small = [g for g in odd_cycle_free4 if g.n <= 3]
        spec = ClassSpec(ClassKind.ODD_CYCLE_FREE, 3)
        index = {gh.canonical_form(g).key() for g in small}
        for r in small:
            for shape in gh.quotient_closure(r, spec):
                assert gh.canonical_form(shape).key() in index


class TestBudgets:
    def test_default_budget_enforced(self):
        with pytest.raises(BoundTooLarge):
            gh.generate(ClassSpec(ClassKind.ALL_DIGRAPHS, 4))

    def test_explicit_budget_allows(self, digraphs4):
        assert len(digraphs4) == 3160

    def test_hard_cap_enforced(self):
        with pytest.raises(BoundTooLarge):
            gh.generate(ClassSpec(ClassKind.ALL_DIGRAPHS, 5), budget=5)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("GAMMAHOM_MAX_N", "4")
        reps = gh.generate(ClassSpec(ClassKind.ALL_DIGRAPHS, 4))
        assert len(reps) == 3160


class TestDeterminism:
    def test_repeat_and_workers_stable(self):
        spec = ClassSpec(ClassKind.POSETS, 4)
        first = gh.generate(spec)
        again = gh.generate(spec)
        threaded = gh.generate(spec, workers=4)
        assert first == again == threaded
