"""Tests for the inequality checkers and the randomized verification suite."""

from __future__ import annotations

from fractions import Fraction as F

import numpy as np
import pytest

from ringcode.core import (
    Code,
    Distribution,
    DistributionError,
    InvalidWeightError,
    NotLocalRingError,
    ParameterError,
    VerificationSuite,
    build_ring,
    check_ball_formula,
    check_distance_axioms,
    check_hamming_average,
    check_ideal_average_lemma,
    check_maxwt,
    check_pair_sum,
    check_probineq,
    greedy_gv,
    hamming,
    max_code,
    overweight,
    verify_johnson,
)
from ringcode.core.verify import check_ring
from ringcode.core.weights import homogeneous

from .conftest import LOCAL_RINGS, TEST_RINGS


def whole_ring(ring) -> Code:
    return Code.from_words(ring, [(x,) for x in ring.elements])


class TestDistribution:
    def test_uniform(self, z4):
        dist = Distribution.uniform(z4, [0, 2])
        assert dist.probabilities == (F(1, 2), 0, F(1, 2), 0)
        assert dist.support == frozenset({0, 2})

    def test_rejects_bad_probabilities(self, z4):
        with pytest.raises(DistributionError):
            Distribution(z4, (F(1, 2), F(1, 2), F(1, 2), 0))
        with pytest.raises(DistributionError):
            Distribution(z4, (F(3, 2), F(-1, 2), 0, 0))
        with pytest.raises(DistributionError):
            Distribution(z4, (1, 0, 0))

    def test_random_is_reproducible(self, z8):
        first = Distribution.random(z8, np.random.default_rng(3))
        second = Distribution.random(z8, np.random.default_rng(3))
        assert first.probabilities == second.probabilities
        assert sum(first.probabilities) == 1

    def test_coordinate(self, z4):
        code = Code.from_words(z4, [(0, 1), (0, 3), (2, 1)])
        assert Distribution.coordinate(code, 0).probabilities == (F(2, 3), 0, F(1, 3), 0)
        with pytest.raises(ParameterError):
            Distribution.coordinate(code, 2)


class TestHammingAverage:
    def test_uniform_on_ideal_is_tight(self, z4):
        report = check_hamming_average({0, 2}, Distribution.uniform(z4, {0, 2}))
        assert report.passed
        assert (report.lhs, report.rhs) == (F(1, 2), F(1, 2))
        assert report.reason == "right equality"

    def test_point_mass(self, z4):
        report = check_hamming_average(z4.elements, Distribution.point_mass(z4, 1))
        assert report.passed
        assert (report.lhs, report.rhs) == (0, F(3, 4))

    def test_uniform_on_ring(self, z4):
        report = check_hamming_average(z4.elements, Distribution.uniform(z4))
        assert report.lhs == F(3, 4)

    def test_support_outside_subset(self, z4):
        with pytest.raises(DistributionError):
            check_hamming_average({0, 2}, Distribution.uniform(z4))


class TestProbabilityInequality:
    def test_point_mass(self, z4):
        report = check_probineq(z4, Distribution.point_mass(z4, 0))
        assert (report.lhs, report.rhs) == (0, 1)

    def test_uniform_is_tight_on_z4(self, z4):
        report = check_probineq(z4, Distribution.uniform(z4))
        assert report.passed
        assert report.lhs == report.rhs == 1

    def test_uniform_on_z8(self, z8):
        report = check_probineq(z8, Distribution.uniform(z8))
        assert (report.lhs, report.rhs) == (F(5, 4), F(3, 2))
        assert report.passed

    def test_non_local_ring(self, z6):
        with pytest.raises(NotLocalRingError):
            check_probineq(z6, Distribution.uniform(z6))


class TestPairSum:
    @pytest.mark.parametrize(
        "words, sides",
        [
            ([(0,), (1,), (2,), (3,)], (12, 16, 16)),
            ([(0, 0), (2, 2)], (8, 8, 8)),
            ([(0,), (1,)], (2, 2, 4)),
        ],
    )
    def test_examples(self, z4, words, sides):
        report = check_pair_sum(Code.from_words(z4, words))
        assert report.passed
        assert (report.lhs, report.mid, report.rhs) == sides

    def test_needs_two_words(self, z4):
        with pytest.raises(ParameterError):
            check_pair_sum(Code.from_words(z4, [(0,)]))


class TestMaxWeight:
    @pytest.mark.parametrize(
        "words, sides",
        [([(0,), (1,)], (2, 2, 4)), ([(0, 0), (1, 1)], (4, 4, 8))],
    )
    def test_examples(self, z4, words, sides):
        report = check_maxwt(Code.from_words(z4, words))
        assert report.passed
        assert (report.lhs, report.mid, report.rhs) == sides

    def test_heavy_word_is_not_applicable(self, z4):
        report = check_maxwt(Code.from_words(z4, [(0,), (2,)]))
        assert report.status == "not-applicable"
        assert report.reason == "ω > γn"

    def test_rejects_other_weights(self, z4):
        with pytest.raises(InvalidWeightError):
            check_maxwt(Code.from_words(z4, [(0,), (1,)]), hamming(z4))

    def test_fractional_weights(self, z6):
        report = check_maxwt(Code.from_words(z6, [(0, 0), (1, 5), (5, 1)]))
        assert report.passed


class TestJohnson:
    def test_whole_ring(self, z4):
        report = verify_johnson(whole_ring(z4))
        assert report.passed
        assert (report.lhs, report.mid, report.rhs) == (1, 1, 1)

    def test_antipodal_code(self, z4):
        report = verify_johnson(Code.from_words(z4, [(0, 0), (2, 2)]), rho=1)
        assert report.passed
        assert (report.lhs, report.mid, report.rhs) == (2, 2, 8)
        assert report.details["profile"]["max_list_size"] == 2

    def test_singleton(self, z4):
        assert verify_johnson(Code.from_words(z4, [(1, 1)])).status == "not-applicable"

    def test_hypotheses_fail(self, z4):
        report = verify_johnson(whole_ring(z4), rho=1)
        assert report.status == "not-applicable"
        assert report.details["johnson"]["extra"]["conditions"] == "none"

    @pytest.mark.slow
    @pytest.mark.parametrize("spec", ["Z4", "Z8", "Z9"])
    def test_profiles_of_searched_codes(self, spec):
        ring = build_ring(spec)
        w = homogeneous(ring)
        for n in (1, 2):
            for d in range(1, 2 * n + 1):
                codes = [greedy_gv(ring, n, d, weight=w).code, max_code(ring, n, d, w=w).code]
                for code in codes:
                    for rho in (0, F(1, 4), F(1, 2), F(3, 4), 1):
                        assert verify_johnson(code, w, rho=rho).status != "fail"


class TestStructuralChecks:
    def test_overweight_is_a_metric(self, z4):
        report = check_distance_axioms(overweight(z4), 2)
        assert report.passed
        assert report.params["mode"] == "exhaustive"

    @pytest.mark.parametrize("spec", TEST_RINGS)
    @pytest.mark.parametrize("n", [1, 2])
    def test_overweight_is_a_metric_everywhere(self, spec, n):
        report = check_distance_axioms(overweight(build_ring(spec)), n)
        assert report.passed
        assert report.params["mode"] == "exhaustive"
        assert report.details["pairs"] == build_ring(spec).order ** (2 * n)

    @pytest.mark.parametrize("spec", TEST_RINGS)
    @pytest.mark.parametrize("n", [3, 4])
    def test_sampled_triangle_inequality(self, spec, n):
        report = check_distance_axioms(overweight(build_ring(spec)), n, samples=100_000, seed=n, exhaustive_limit=0)
        assert report.passed
        assert report.params["mode"] == "sampled"
        assert report.details["triples"] == 100_000

    def test_z6_homogeneous_breaks_triangle(self, z6):
        report = check_distance_axioms(homogeneous(z6), 1)
        assert report.status == "fail"
        assert report.details == {"axiom": "triangle", "witness": [[1], [1]]}

    def test_product_homogeneous_breaks_identity(self):
        ring = build_ring("Z2xZ2")
        report = check_distance_axioms(homogeneous(ring, gamma=1), 1)
        assert report.details["axiom"] == "identity"

    @pytest.mark.parametrize("spec", LOCAL_RINGS)
    def test_ideal_average_lemma(self, spec):
        assert check_ideal_average_lemma(build_ring(spec)).passed

    def test_ideal_average_on_field(self):
        report = check_ideal_average_lemma(build_ring("GF(4)"))
        assert report.passed
        assert "field" in report.reason

    @pytest.mark.parametrize("spec", TEST_RINGS)
    def test_ball_formula(self, spec):
        report = check_ball_formula(build_ring(spec), 3)
        assert report.passed
        assert len(report.details["radii"]) == 7

    def test_ring_axioms(self, z4):
        assert check_ring(z4).passed


class TestSuite:
    @pytest.mark.parametrize("spec", ["Z4", "Z8", "Z9", "Z2[x]/(x^2)"])
    def test_probineq_never_fails(self, spec):
        summary = VerificationSuite(seed=1, trials=200).run_probineq(build_ring(spec))
        assert summary.failed == 0
        assert summary.trials == 201
        assert summary.passed == 201

    def test_uniform_trial_is_counted_as_equality(self, z4):
        summary = VerificationSuite(seed=0, trials=10).run_probineq(z4)
        assert summary.equalities >= 1

    @pytest.mark.parametrize("spec", ["Z4", "Z8", "Z9"])
    def test_pair_sum_never_fails(self, spec):
        summary = VerificationSuite(seed=2, trials=200).run_pair_sum(build_ring(spec))
        assert summary.status == "pass"

    @pytest.mark.parametrize("spec", ["Z4", "Z6", "Z8", "Z2xZ2"])
    def test_maxwt_never_fails(self, spec):
        summary = VerificationSuite(seed=3, trials=200).run_maxwt(build_ring(spec))
        assert summary.failed == 0
        assert summary.passed + summary.not_applicable == 200

    def test_workers_do_not_change_results(self, z8):
        serial = VerificationSuite(seed=4, trials=100, workers=1).run_all(z8)
        threaded = VerificationSuite(seed=4, trials=100, workers=4).run_all(z8)
        assert [s.to_dict() for s in serial] == [s.to_dict() for s in threaded]

    def test_seed_changes_draws(self, z8):
        first = VerificationSuite(seed=5, trials=50).run_pair_sum(z8)
        again = VerificationSuite(seed=5, trials=50).run_pair_sum(z8)
        assert first.to_dict() == again.to_dict()

    def test_non_local_ring_skips_overweight_suites(self, z6):
        summaries = VerificationSuite(seed=0, trials=20).run_all(z6)
        assert [s.status for s in summaries] == ["skipped", "skipped", "pass"]
        assert summaries[0].reason == "not a local ring"

    def test_progress_callback(self, z4):
        messages: list[str] = []
        VerificationSuite(seed=0, trials=5, progress_callback=messages.append).run_pair_sum(z4)
        assert messages == ["pair_sum on Z4: 5/5 passed, 0 failed, 0 not applicable"]

    def test_config_defaults(self, z4, isolated_config):
        isolated_config.verify.trials = 7
        assert VerificationSuite().run_pair_sum(z4).trials == 7

    @pytest.mark.slow
    @pytest.mark.parametrize("spec", LOCAL_RINGS[2:])
    def test_thousand_trials(self, spec):
        ring = build_ring(spec)
        suite = VerificationSuite(seed=0, trials=1000)
        for summary in suite.run_all(ring):
            assert summary.failed == 0
