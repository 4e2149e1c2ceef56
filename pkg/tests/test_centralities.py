"""Clustering, betweenness/stress, closeness, radiality, local efficiency."""

from fractions import Fraction

import pytest

from centrel import (FamilySpec, all_pairs, average_clustering,
                     betweenness_and_stress, closeness, compute_report,
                     generate, global_clustering, local_clustering,
                     local_efficiency, radiality)
from centrel.centralities import (betweenness_definitional,
                                  stress_definitional, triangle_count)
from centrel.graphs import from_edge_list


def make(family, *params, seed=None):
    return generate(FamilySpec(family, params, seed=seed))


class TestClustering:
    def test_local_complete(self):
        g = make("complete", 4)
        assert all(local_clustering(g, i) == 1 for i in range(4))

    def test_local_cycle(self):
        g = make("cycle", 5)
        assert all(local_clustering(g, i) == 0 for i in range(5))

    def test_local_windmill_hub(self):
        g = make("windmill", 2, 3)
        assert local_clustering(g, 0) == Fraction(1, 3)

    def test_degree_one_convention(self, path3):
        assert local_clustering(path3, 0) == 0
        assert local_clustering(path3, 1) == 0

    def test_average_and_global_complete(self):
        for n in (3, 5, 8):
            g = make("complete", n)
            assert average_clustering(g) == 1
            assert global_clustering(g) == 1

    def test_windmill_2_3(self):
        g = make("windmill", 2, 3)
        assert average_clustering(g) == Fraction(13, 15)
        assert global_clustering(g) == Fraction(3, 5)

    def test_triangle_free(self):
        g = make("cycle", 5)
        assert average_clustering(g) == 0
        assert global_clustering(g) == 0

    def test_global_undefined_on_k2(self):
        g = from_edge_list([(0, 1)], 2)
        with pytest.raises(ValueError):
            global_clustering(g)

    def test_triangle_count(self):
        assert triangle_count(make("complete", 5)) == 10
        assert triangle_count(make("windmill", 3, 4)) == 12
        assert triangle_count(make("cycle", 6)) == 0

    def test_regular_graphs_have_equal_coefficients(self):
        for g in (make("cycle", 5), make("hypercube", 3),
                  make("circulant", 8, 1, 2), make("complete", 6),
                  make("circulant", 10, 1, 5)):
            assert average_clustering(g) == global_clustering(g)


class TestBetweennessStress:
    def test_complete_zero(self):
        for n in (3, 5, 7):
            bc, st = betweenness_and_stress(make("complete", n))
            assert all(x == 0 for x in bc)
            assert all(x == 0 for x in st)

    def test_c5(self):
        bc, st = betweenness_and_stress(make("cycle", 5))
        assert all(x == 2 for x in bc)
        assert all(x == 2 for x in st)

    def test_c4(self):
        bc, st = betweenness_and_stress(make("cycle", 4))
        assert all(x == 1 for x in bc)
        assert all(x == 2 for x in st)

    def test_float_mode_close_to_exact(self):
        g = make("random-min-degree-2", 16, seed=2)
        exact_bc, _ = betweenness_and_stress(g)
        float_bc, _ = betweenness_and_stress(g, exact=False)
        for a, b in zip(exact_bc, float_bc):
            assert abs(float(a) - b) < 1e-9

    def test_exact_mode_auto_threshold(self, monkeypatch):
        import centrel.centralities as cents
        g = make("cycle", 8)
        bc_exact, _ = cents.betweenness_and_stress(g)
        assert isinstance(bc_exact[0], Fraction)
        monkeypatch.setattr(cents, "EXACT_BC_MAX_VERTICES", 4)
        bc_float, st = cents.betweenness_and_stress(g)
        assert isinstance(bc_float[0], float)
        # stress stays exact whichever mode the fallback picks
        assert all(isinstance(x, int) for x in st)
        assert all(abs(float(a) - b) < 1e-9 for a, b in zip(bc_exact, bc_float))

    def test_brandes_equals_definitional(self, family_suite):
        for name, g in family_suite:
            dd = all_pairs(g)
            bc, st = betweenness_and_stress(g)
            assert bc == betweenness_definitional(g, dd), name
            assert st == stress_definitional(g, dd), name

    def test_stress_dominates_betweenness(self, full_suite):
        for name, g in full_suite[:30]:
            bc, st = betweenness_and_stress(g)
            for b, s in zip(bc, st):
                assert b >= 0 and s >= b, name

    def test_betweenness_sum_on_unique_path_graphs(self):
        # with all shortest paths unique, the total equals the number of
        # ordered pairs weighted by interior length
        for g in (make("complete", 6), make("windmill", 2, 3),
                  make("windmill", 4, 5)):
            dd = all_pairs(g)
            bc, _ = betweenness_and_stress(g)
            assert all(dd.sigma[s][t] == 1
                       for s in range(g.n) for t in range(g.n) if s != t)
            expected = sum(dd.dist[s][t] - 1
                           for s in range(g.n) for t in range(g.n) if s != t)
            assert sum(bc) == expected


class TestClosenessRadiality:
    def test_complete(self):
        g = make("complete", 5)
        dd = all_pairs(g)
        for v in range(5):
            assert closeness(g, dd, v) == 1
            assert radiality(g, dd, v) == 1

    def test_c5(self):
        g = make("cycle", 5)
        dd = all_pairs(g)
        for v in range(5):
            assert closeness(g, dd, v) == Fraction(2, 3)
            assert radiality(g, dd, v) == Fraction(3, 2)

    def test_windmill_hub(self):
        g = make("windmill", 2, 3)
        dd = all_pairs(g)
        assert closeness(g, dd, 0) == 1


class TestLocalEfficiency:
    def test_complete(self):
        g = make("complete", 4)
        assert local_efficiency(g, all_pairs(g)) == 1

    def test_c5(self):
        g = make("cycle", 5)
        assert local_efficiency(g, all_pairs(g)) == Fraction(1, 2)

    def test_windmill(self):
        g = make("windmill", 2, 3)
        assert local_efficiency(g, all_pairs(g)) == Fraction(14, 15)

    def test_half_one_plus_clustering_identity(self, full_suite):
        for name, g in full_suite[:40]:
            dd = all_pairs(g)
            assert local_efficiency(g, dd) == (1 + average_clustering(g)) / 2, name

    def test_induced_variant_differs(self):
        # cross-clique neighbor pairs are unreachable inside the induced
        # neighborhood of the hub, so the induced value drops
        g = make("windmill", 2, 3)
        dd = all_pairs(g)
        assert local_efficiency(g, dd, induced=True) == Fraction(13, 15)
        assert local_efficiency(g, dd) == Fraction(14, 15)

    def test_induced_variant_equal_on_complete(self):
        g = make("complete", 5)
        dd = all_pairs(g)
        assert local_efficiency(g, dd, induced=True) == local_efficiency(g, dd)


class TestReport:
    def test_report_fields_consistent(self):
        g = make("windmill", 2, 3)
        rep = compute_report(g)
        assert rep.degree == [4, 2, 2, 2, 2]
        assert rep.avg_clustering == Fraction(13, 15)
        assert rep.global_clustering == Fraction(3, 5)
        assert rep.diameter == 2
        assert rep.local_efficiency == Fraction(14, 15)
        assert rep.betweenness[0] == 8
        assert rep.stress[0] == 8

    def test_report_value_ranges(self, full_suite):
        for name, g in full_suite[:25]:
            rep = compute_report(g)
            assert 0 <= rep.avg_clustering <= 1, name
            assert 0 <= rep.density <= 1, name
            assert 0 <= rep.local_efficiency <= 1, name
            if rep.global_clustering is not None:
                assert 0 <= rep.global_clustering <= 1, name
            for i in range(g.n):
                assert 0 <= rep.local_clustering[i] <= 1, name
                assert rep.betweenness[i] >= 0, name
                assert rep.stress[i] >= rep.betweenness[i], name
