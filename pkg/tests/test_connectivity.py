import pytest

import gammahom as gh
from gammahom import HomMode, HomSetHandle, VertexMap
from gammahom.errors import NotAHomomorphism, VertexNotInSubset

from helpers import A2R, C2, CHAIN3, D
from oracles import brute_convex, brute_gamma


def _subsets(n):
    for mask in range(1, 1 << n):
        yield tuple(v for v in range(n) if mask >> v & 1)


class TestGamma:
    def test_adjacent_pair(self):
        assert gh.gamma(D(2, "01"), (0, 1), 0) == (0, 1)

    def test_no_arcs(self):
        assert gh.gamma(D(2), (0, 1), 0) == (0,)

    def test_line_blocked_outside_subset(self):
        # The only line joining 0 and 2 passes through 1, which is not in the
        # subset; confirmed by the brute-force line search.
        g = D(3, "01", "12")
        assert brute_gamma(g, (0, 2), 0) == {0}
        assert gh.gamma(g, (0, 2), 0) == (0,)

    def test_vertex_outside_subset_rejected(self):
        with pytest.raises(VertexNotInSubset):
            gh.gamma(D(2, "01"), (1,), 0)

    def test_loops_do_not_connect(self):
        assert gh.gamma(D(2, "00", "11"), (0, 1), 0) == (0,)

    def test_matches_line_oracle_exhaustively(self, digraphs3):
        for g in digraphs3:
            for subset in _subsets(g.n):
                for v in subset:
                    assert set(gh.gamma(g, subset, v)) == brute_gamma(g, subset, v)


class TestPartitionLaws:
    def test_blocks_partition_subset(self, digraphs4):
        for g in digraphs4:
            for subset in _subsets(g.n):
                cm = gh.component_map(g, subset)
                flat = [v for block in cm.blocks for v in block]
                assert sorted(flat) == list(subset)
                assert len(set(flat)) == len(flat)

    def test_symmetry_of_membership(self, digraphs3):
        for g in digraphs3:
            for subset in _subsets(g.n):
                for v in subset:
                    block = gh.gamma(g, subset, v)
                    assert v in block
                    for w in block:
                        assert v in gh.gamma(g, subset, w)

    def test_monotone_in_subset(self, digraphs4):
        for g in digraphs4:
            full = tuple(range(g.n))
            for subset in _subsets(g.n):
                for v in subset:
                    inner = set(gh.gamma(g, subset, v))
                    assert inner <= set(gh.gamma(g, full, v))

    def test_idempotence(self, digraphs4):
        for g in digraphs4:
            for subset in _subsets(g.n):
                for v in subset:
                    block = gh.gamma(g, subset, v)
                    assert gh.gamma(g, block, v) == block


class TestGammaComponent:
    def test_constant_on_connected(self):
        xi = VertexMap(2, 2, (0, 0))
        assert gh.gamma_component(C2, xi, 0) == (0, 1)

    def test_strict_maps_have_singleton_components(self, posets3):
        for g in posets3:
            for h in posets3:
                for xi in HomSetHandle(g, h, HomMode.STRICT):
                    for v in range(g.n):
                        assert gh.gamma_component(g, xi, v) == (v,)

    def test_singleton_components_imply_strict(self, posets3):
        for g in posets3:
            for h in posets3:
                for xi in HomSetHandle(g, h, HomMode.ALL):
                    singletons = all(
                        gh.gamma_component(g, xi, v) == (v,) for v in range(g.n)
                    )
                    assert singletons == gh.is_homomorphism(g, h, xi, HomMode.STRICT)

    def test_constant_on_disconnected_reflexive_pair(self):
        xi = VertexMap(2, 2, (0, 0))
        assert gh.gamma_component(A2R, xi, 0) == (0,)


class TestConvexity:
    def test_full_vertex_set(self):
        assert gh.is_convex(CHAIN3, range(3))

    def test_chain_endpoints_not_convex(self):
        assert gh.is_convex(CHAIN3, (0, 2)) is False

    def test_chain_middle_is_convex(self):
        assert gh.is_convex(CHAIN3, (1,)) is True

    def test_matches_walk_oracle(self, digraphs3):
        for g in digraphs3:
            for subset in _subsets(g.n):
                assert gh.is_convex(g, subset) == brute_convex(g, subset)


class TestCompositionMonotonicity:
    def test_identity_gives_equality(self):
        xi = VertexMap(2, 2, (0, 1))
        ident = gh.identity_map(2)
        assert gh.gamma_monotone_check(C2, C2, C2, xi, ident)

    def test_constant_target_covers_components(self):
        xi = gh.identity_map(2)
        const = VertexMap(2, 1, (0, 0))
        point = D(1, "00")
        assert gh.gamma_monotone_check(C2, C2, point, xi, const)
        composed = gh.compose(const, xi)
        assert gh.gamma_component(C2, composed, 0) == (0, 1)

    def test_rejects_non_homomorphisms(self):
        bad = VertexMap(2, 2, (1, 0))  # reverses the chain arc
        with pytest.raises(NotAHomomorphism):
            gh.gamma_monotone_check(C2, C2, C2, bad, gh.identity_map(2))

    def test_exhaustive_over_poset_triples(self, posets3):
        for g in posets3:
            for h in posets3:
                homs_gh = HomSetHandle(g, h, HomMode.ALL).maps
                if not homs_gh:
                    continue
                for h_prime in posets3:
                    for sigma in HomSetHandle(h, h_prime, HomMode.ALL):
                        for xi in homs_gh:
                            assert gh.gamma_monotone_check(g, h, h_prime, xi, sigma)


class TestBoundaryProperty:
    # Strict inclusion between matching components happens exactly when some
    # adjacent pair inside the bigger block maps to a proper arc under the
    # smaller map.
    def _check(self, g, h, h_prime):
        for xi in HomSetHandle(g, h, HomMode.ALL):
            for zeta in HomSetHandle(g, h_prime, HomMode.ALL):
                for v in range(g.n):
                    inner = set(gh.gamma_component(g, xi, v))
                    outer = set(gh.gamma_component(g, zeta, v))
                    if not inner <= outer:
                        continue
                    witness = any(
                        xi.images[a] != xi.images[b]
                        for a, b in g.proper_arcs
                        if a in outer and b in outer
                    )
                    assert (inner < outer) == witness

    def test_posets_up_to_three(self, posets3):
        for g in posets3:
            for h in posets3:
                for h_prime in posets3:
                    self._check(g, h, h_prime)

    def test_digraphs_up_to_two(self, digraphs2):
        for g in digraphs2:
            for h in digraphs2:
                for h_prime in digraphs2:
                    self._check(g, h, h_prime)
