import math

import numpy as np
import pytest

import core.verify
from core.graph import complete_bipartite_graph
from core.models import Identity
from core.verify import (
    relative_residual,
    run_identity,
    sample_box,
    sample_disk,
    verify_characteristic_polynomial,
    verify_functional_equation,
    verify_ihara_bass,
    verify_konno_sato,
    verify_reduced_cycles,
    verify_riemann_hypothesis,
    verify_spectral_mapping,
    verify_structure,
)


class TestHelpers:
    def test_relative_residual(self):
        assert relative_residual(1.0, 1.0) == 0.0
        assert relative_residual(0.0, 1e-3) == pytest.approx(1e-3)
        assert relative_residual(100.0, 101.0) == pytest.approx(1 / 101)

    def test_disk_sampling(self):
        rng = np.random.default_rng(0)
        assert all(abs(sample_disk(rng, 0.5)) <= 0.5 for _ in range(200))

    def test_box_sampling(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            s = sample_box(rng)
            assert -2.0 <= s.real <= 3.0
            assert -3.0 <= s.imag <= 3.0

    def test_same_seed_same_samples(self, k4):
        a = verify_konno_sato(k4, num_samples=5, seed=11)
        b = verify_konno_sato(k4, num_samples=5, seed=11)
        assert [s.point for s in a.samples] == [s.point for s in b.samples]

    @pytest.mark.parametrize("kwargs", [{"num_samples": 0}, {"radius": 0.0}, {"radius": -1.0}])
    def test_invalid_sampling(self, k4, kwargs):
        with pytest.raises(ValueError):
            verify_konno_sato(k4, **kwargs)


class TestDeterminantIdentities:
    def test_konno_sato_on_pool(self, pool):
        for g in pool:
            report = verify_konno_sato(g, num_samples=20)
            assert report.passed, (g.name, report.max_rel_residual)
            assert len(report.samples) == 20

    def test_ihara_bass_on_pool(self, pool):
        for g in pool:
            report = verify_ihara_bass(g, num_samples=20)
            assert report.passed, (g.name, report.max_rel_residual)

    def test_near_unit_radius_on_tree(self, p5):
        report = verify_konno_sato(p5, num_samples=50, radius=1.0)
        assert report.passed
        assert all(abs(s.point ** 2 - 1) >= 1e-6 for s in report.samples)

    def test_characteristic_polynomial_on_pool(self, pool):
        for g in pool:
            report = verify_characteristic_polynomial(g, num_samples=5)
            assert report.passed, (g.name, report.max_rel_residual)
            assert len(report.samples) == 10


class TestSpectralIdentities:
    def test_mapping_on_pool(self, pool):
        for g in pool:
            report = verify_spectral_mapping(g)
            assert report.passed, (g.name, report.max_rel_residual)

    def test_mapping_report_shape(self, s5):
        report = verify_spectral_mapping(s5)
        assert [s.point for s in report.samples] == ["Spec(U)", "multiplicities"]
        assert report.samples[0].lhs == report.samples[0].rhs == 2 * s5.m


class TestCyclesAndStructure:
    def test_reduced_cycles(self, k4):
        report = verify_reduced_cycles(k4)
        assert report.passed
        assert [s.point for s in report.samples] == [f"N_{r}" for r in range(1, 7)]
        assert report.samples[2].lhs == 24

    def test_reduced_cycles_skipped_for_large_graphs(self, k5):
        report = verify_reduced_cycles(k5, max_arcs=10)
        assert report.samples == ()
        assert report.passed

    def test_structure(self, petersen):
        report = verify_structure(petersen)
        assert report.passed
        assert {s.point for s in report.samples} == {
            "adjacency", "laplacian", "connected", "bipartite", "normalized-laplacian"
        }


class TestLambdaQW:
    def test_functional_equation_on_pool(self, pool):
        for g in pool:
            report = verify_functional_equation(g)
            assert report.passed, (g.name, report.max_rel_residual)
            assert len(report.samples) == 100

    def test_riemann_hypothesis_on_pool(self, pool):
        for g in pool:
            report = verify_riemann_hypothesis(g)
            assert report.passed, (g.name, report.max_rel_residual)

    def test_riemann_hypothesis_bipartite_graph_has_a_quarter(self):
        report = verify_riemann_hypothesis(complete_bipartite_graph(2, 3))
        bipartite = report.samples[-1]
        assert bipartite.point == "bipartite"
        assert bipartite.lhs == bipartite.rhs == 1.0

    def test_riemann_hypothesis_roots_on_critical_line(self, c3):
        report = verify_riemann_hypothesis(c3)
        roots = [s for s in report.samples if isinstance(s.point, complex)]
        assert len(roots) == 2
        assert all(s.lhs == pytest.approx(0.5) for s in roots)


class TestRunIdentity:
    def test_all_on_cycle(self, c4):
        reports = run_identity(c4, Identity.ALL, num_samples=5)
        assert [r.identity_name for r in reports] == [
            "konno-sato", "ihara-bass", "spectral-map", "char-poly",
            "cycles", "structure", "functional-eq", "rh",
        ]
        assert all(r.passed for r in reports)
        assert all(r.graph_name == "C_4" for r in reports)

    def test_single(self, k4):
        reports = run_identity(k4, Identity.IHARA_BASS, num_samples=3, seed=5)
        assert len(reports) == 1
        assert len(reports[0].samples) == 3

    def test_failures_are_reported_not_raised(self, k4):
        report = verify_konno_sato(k4, num_samples=3, tol=0.0)
        assert report.tolerance == 0.0
        assert not math.isnan(report.max_rel_residual)

    @pytest.mark.parametrize("identity", [Identity.FUNCTIONAL_EQ, Identity.RH])
    def test_grouping_tol_reaches_lambda_identities(self, c4, monkeypatch, identity):
        seen = []

        def recording(fn):
            def wrapper(g, tol):
                seen.append(tol)
                return fn(g, tol)
            return wrapper

        monkeypatch.setattr(core.verify, 'm_spectrum', recording(core.verify.m_spectrum))
        monkeypatch.setattr(core.verify, 'qw_zero_set', recording(core.verify.qw_zero_set))
        reports = run_identity(c4, identity, grouping_tol=1e-6)
        assert reports[0].passed
        assert seen and all(tol == 1e-6 for tol in seen)
