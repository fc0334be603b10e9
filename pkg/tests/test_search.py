import math

import numpy as np
import pytest

from squeezing import (
    Annulus,
    EmbeddingCandidate,
    InjectivityCertificate,
    annulus_lower_bound,
    annulus_minimum_value,
    injectivity_certificate,
    laurent_map,
    monotonicity_scan,
    objective,
    tier_a_bound,
    tier_b_search,
)
from squeezing.errors import (
    DomainValidationError,
    ImageEscapesDisc,
    NotCertified,
    PointOutsideAnnulus,
)

QUARTER = Annulus(0.25)


class TestObjective:
    def test_inclusion_reproduces_closed_form(self):
        candidate = EmbeddingCandidate.mobius_inclusion()
        assert objective(candidate, QUARTER, 0.5) == pytest.approx(2.0 / 7.0, abs=1e-9)

    def test_reflection_branch_near_inner_circle(self):
        candidate = EmbeddingCandidate.mobius_reflection(QUARTER.r)
        value = objective(candidate, QUARTER, 0.3)
        assert value == pytest.approx(annulus_lower_bound(QUARTER, 0.3).value, abs=1e-9)

    def test_certified_identity_laurent_matches_inclusion(self):
        coefficients = np.array([0, 0, 1], dtype=complex)
        certificate = injectivity_certificate(laurent_map(coefficients), QUARTER, 16)
        candidate = EmbeddingCandidate.laurent(coefficients, certificate)
        assert candidate.status == "certified"
        inclusion = objective(EmbeddingCandidate.mobius_inclusion(), QUARTER, 0.5)
        assert objective(candidate, QUARTER, 0.5) == pytest.approx(inclusion, abs=1e-9)

    def test_uncertified_candidate_rejected(self):
        square = np.array([0, 0, 0, 0, 1], dtype=complex)
        certificate = injectivity_certificate(laurent_map(square), Annulus(0.5), 16)
        candidate = EmbeddingCandidate.laurent(square, certificate)
        assert candidate.status == "refuted"
        with pytest.raises(NotCertified):
            objective(candidate, Annulus(0.5), 0.7)

    def test_escaping_image_rejected(self):
        stamped = InjectivityCertificate("certified", 0, float("inf"))
        candidate = EmbeddingCandidate.laurent(np.array([0, 0, 1.2], dtype=complex), stamped)
        with pytest.raises(ImageEscapesDisc):
            objective(candidate, QUARTER, 0.5)

    def test_point_must_be_in_annulus(self):
        with pytest.raises(PointOutsideAnnulus):
            objective(EmbeddingCandidate.mobius_inclusion(), QUARTER, 0.1)


class TestTierA:
    def test_golden_value(self):
        result = tier_a_bound(QUARTER, 0.5)
        assert result.best_value == pytest.approx(2.0 / 7.0, abs=1e-9)
        assert result.evaluations == 2

    def test_matches_closed_form_on_grid(self):
        root = math.sqrt(QUARTER.r)
        for rho in root + (1.0 - root) * np.arange(64) / 64:
            closed = annulus_lower_bound(QUARTER, rho).value
            assert tier_a_bound(QUARTER, rho).best_value == pytest.approx(closed, abs=1e-9)

    def test_minimum_at_fold_point(self):
        result = tier_a_bound(QUARTER, math.sqrt(QUARTER.r))
        assert result.best_value == pytest.approx(annulus_minimum_value(QUARTER), abs=1e-9)

    def test_boundary_limit(self):
        assert tier_a_bound(QUARTER, 1.0 - 1e-8).best_value > 0.999

    def test_reflection_family_selected_near_inner_circle(self):
        result = tier_a_bound(QUARTER, 0.3)
        assert result.best_candidate.family == "mobius-reflection"

    def test_conjecture_value_reported(self):
        result = tier_a_bound(QUARTER, 0.5)
        assert result.conjecture_value == pytest.approx(2.0 / 7.0, abs=1e-9)


class TestTierB:
    def test_degree_zero_collapses_to_tier_a(self):
        collapsed = tier_b_search(QUARTER, 0.5, degree=0, budget=10, seed=0)
        reference = tier_a_bound(QUARTER, 0.5, samples=2 * 2048)
        assert collapsed.best_value == reference.best_value
        assert collapsed.evaluations == 2

    def test_containment(self):
        result = tier_b_search(QUARTER, 0.5, degree=1, budget=80, seed=1)
        assert result.best_value >= result.tier_a_value - 1e-9
        assert 0.0 < result.best_value < 1.0

    def test_winner_survives_reevaluation(self):
        result = tier_b_search(QUARTER, 0.5, degree=1, budget=80, seed=1)
        if result.best_candidate.family == "laurent":
            again = objective(result.best_candidate, QUARTER, 0.5, samples=2 * 2048)
            assert again == pytest.approx(result.best_value, abs=1e-9)

    def test_determinism(self):
        first = tier_b_search(QUARTER, 0.5, degree=1, budget=60, seed=3)
        second = tier_b_search(QUARTER, 0.5, degree=1, budget=60, seed=3)
        assert first.best_value == second.best_value
        assert first.evaluations == second.evaluations
        assert np.array_equal(first.best_candidate.coefficients, second.best_candidate.coefficients)

    def test_budget_exhaustion_still_returns(self):
        result = tier_b_search(QUARTER, 0.5, degree=2, budget=5, seed=0)
        assert result.budget_exhausted
        assert result.best_value >= result.tier_a_value - 1e-9

    def test_conjecture_gap_is_reported_not_asserted(self):
        result = tier_b_search(QUARTER, 0.5, degree=1, budget=60, seed=1)
        assert result.conjecture_gap == result.best_value - result.conjecture_value

    def test_degree_cap(self):
        with pytest.raises(DomainValidationError):
            tier_b_search(QUARTER, 0.5, degree=5, budget=10, seed=0)
        with pytest.raises(DomainValidationError):
            tier_b_search(QUARTER, 0.5, degree=2, budget=0, seed=0)


class TestMonotonicityScan:
    def test_tier_a_no_inversions(self):
        report = monotonicity_scan(QUARTER, grid=64, tier="A")
        assert report.inversions == 0

    def test_endpoints(self):
        report = monotonicity_scan(QUARTER, grid=64, tier="A")
        assert report.rho[0] == pytest.approx(math.sqrt(QUARTER.r), abs=0)
        assert report.values[0] == pytest.approx(annulus_minimum_value(QUARTER), abs=1e-9)
        assert report.values[-1] > report.values[0]

    def test_tier_b_reports_only(self):
        report = monotonicity_scan(QUARTER, grid=8, tier="B", degree=1, budget=30, seed=0)
        assert report.inversions >= 0
        assert len(report.values) == 8

    def test_grid_floor(self):
        with pytest.raises(DomainValidationError):
            monotonicity_scan(QUARTER, grid=4, tier="A")
