import random
from itertools import product
from math import comb

import pytest

from hyperdescent import simplex as sx
from hyperdescent.simplex import MonotoneMap


def mk(src, tgt, vals):
    return MonotoneMap(src, tgt, tuple(vals))


class TestMonotoneMap:
    def test_rejects_non_monotone(self):
        with pytest.raises(ValueError):
            mk(1, 1, (1, 0))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            mk(0, 1, (2,))

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            mk(1, 1, (0,))

    def test_predicates(self):
        assert sx.identity(3).is_identity
        assert sx.coface(2, 1).is_injective
        assert sx.codegeneracy(2, 0).is_surjective
        assert not mk(1, 1, (0, 0)).is_injective


class TestCompose:
    def test_direct_evaluation(self):
        f = mk(0, 1, (1,))
        g = mk(1, 2, (0, 2))
        assert sx.compose(g, f) == mk(0, 2, (2,))

    def test_identity_law(self):
        g = mk(3, 2, (0, 0, 1, 2))
        assert sx.compose(g, sx.identity(3)) == g
        assert sx.compose(sx.identity(2), g) == g

    def test_constant_absorption(self):
        f = mk(1, 1, (0, 0))
        g = mk(1, 1, (0, 1))
        assert sx.compose(g, f) == mk(1, 1, (0, 0))

    def test_mismatch_raises(self):
        with pytest.raises(ValueError):
            sx.compose(mk(1, 1, (0, 1)), mk(0, 2, (1,)))

    def test_associativity_exhaustive_small(self):
        maps = []
        for i, j in product(range(3), repeat=2):
            maps.extend(sx.enumerate_monotone(i, j))
        by_src = {}
        for f in maps:
            by_src.setdefault(f.source, []).append(f)
        rng = random.Random(0)
        triples = 0
        while triples < 500:
            f = rng.choice(maps)
            gs = [g for g in by_src.get(f.target, []) if g.source == f.target]
            if not gs:
                continue
            g = rng.choice(gs)
            hs = [h for h in by_src.get(g.target, []) if h.source == g.target]
            if not hs:
                continue
            h = rng.choice(hs)
            assert sx.compose(h, sx.compose(g, f)) == sx.compose(sx.compose(h, g), f)
            triples += 1


class TestEpiMonoFactorization:
    def test_constant_map(self):
        sigma, delta = sx.epi_mono_factorization(mk(1, 1, (0, 0)))
        assert sigma == mk(1, 0, (0, 0))
        assert delta == mk(0, 1, (0,))

    def test_injective_case(self):
        alpha = mk(1, 3, (0, 2))
        sigma, delta = sx.epi_mono_factorization(alpha)
        assert sigma.is_identity
        assert delta == alpha

    def test_image_enumeration(self):
        sigma, delta = sx.epi_mono_factorization(mk(2, 2, (0, 0, 2)))
        assert sigma == mk(2, 1, (0, 0, 1))
        assert delta == mk(1, 2, (0, 2))

    def test_unique_refactoring(self):
        for i, m in product(range(4), range(4)):
            for alpha in sx.enumerate_monotone(i, m):
                sigma, delta = sx.epi_mono_factorization(alpha)
                assert sigma.is_surjective and delta.is_injective
                assert sx.compose(delta, sigma) == alpha
                s2, d2 = sx.epi_mono_factorization(sx.compose(delta, sigma))
                assert (s2, d2) == (sigma, delta)


class TestEnumeration:
    def test_counts_1_1(self):
        maps = sx.enumerate_monotone(1, 1)
        assert [f.values for f in maps] == [(0, 0), (0, 1), (1, 1)]

    def test_counts_0_2(self):
        assert len(sx.enumerate_monotone(0, 2)) == 3

    def test_counts_2_1(self):
        assert len(sx.enumerate_monotone(2, 1)) == 4

    def test_binomial_counts(self):
        for i in range(7):
            for m in range(7):
                assert len(sx.enumerate_monotone(i, m)) == comb(i + m + 1, i + 1)
                assert sx.monotone_count(i, m) == comb(i + m + 1, i + 1)

    def test_injective_counts(self):
        for i in range(5):
            for m in range(5):
                expect = comb(m + 1, i + 1) if i <= m else 0
                assert len(sx.enumerate_injective(i, m)) == expect

    def test_canonical_order(self):
        maps = sx.enumerate_monotone(2, 2)
        assert maps == sorted(maps)


class TestIntervalMaps:
    def test_j1(self):
        assert [t.values for t in sx.interval_maps(1)] == [(0, 0), (0, 1), (1, 1)]

    def test_j0_constants(self):
        maps = sx.interval_maps(0)
        assert [t.values for t in maps] == [(0,), (1,)]

    def test_j2_count(self):
        assert len(sx.interval_maps(2)) == 4

    def test_lengths_and_endpoints(self):
        for j in range(9):
            maps = sx.interval_maps(j)
            assert len(maps) == j + 2
            assert maps[0] == sx.constant(j, 1, 0)
            assert maps[-1] == sx.constant(j, 1, 1)

    def test_closure_under_precomposition(self):
        for i in range(5):
            for j in range(5):
                taus = set(sx.interval_maps(i))
                for alpha in sx.enumerate_monotone(i, j):
                    for tau in sx.interval_maps(j):
                        assert sx.compose(tau, alpha) in taus


class TestIndexCategory:
    def test_counts_n1_m2(self):
        cat = sx.build_index_category(1, 2)
        assert len(cat.objects) == 6
        non_identity = [t for t in cat.morphisms if not t[2].is_identity]
        assert len(non_identity) == 6

    def test_counts_n0_m1(self):
        cat = sx.build_index_category(0, 1)
        assert len(cat.objects) == 2
        assert all(t[2].is_identity for t in cat.morphisms)

    def test_morphism_triples_commute(self):
        for n, m in [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)]:
            cat = sx.build_index_category(n, m)
            for a, b, alpha in cat.morphisms:
                assert sx.compose(cat.objects[b], alpha) == cat.objects[a]
                assert alpha.is_injective

    def test_objects_exactly_injections(self):
        cat = sx.build_index_category(2, 3)
        expect = set()
        for i in range(3):
            expect.update(sx.enumerate_injective(i, 3))
        assert set(cat.objects) == expect
        assert list(cat.objects) == sorted(cat.objects)

    def test_requires_m_above_n(self):
        with pytest.raises(ValueError):
            sx.build_index_category(2, 2)


def test_coface_codegeneracy_identities():
    # cosimplicial identities for the generators, spot checked
    for n in range(2, 5):
        for i in range(n):
            for j in range(i + 1, n + 1):
                lhs = sx.compose(sx.coface(n, j), sx.coface(n - 1, i))
                rhs = sx.compose(sx.coface(n, i), sx.coface(n - 1, j - 1))
                assert lhs == rhs
    for n in range(4):
        for i in range(n + 1):
            assert sx.compose(sx.codegeneracy(n, i), sx.coface(n + 1, i)).is_identity
            assert sx.compose(sx.codegeneracy(n, i), sx.coface(n + 1, i + 1)).is_identity
