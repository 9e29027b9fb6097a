"""Tests for the Plotkin, sphere-packing, Gilbert-Varshamov and Johnson bounds."""

from __future__ import annotations

from fractions import Fraction as F

import numpy as np
import pytest
import sympy

from ringcode.core import (
    FieldRingError,
    NotLocalRingError,
    ParameterError,
    bound_grid,
    build_ring,
    gilbert_varshamov_overweight,
    johnson_homogeneous,
    johnson_refined,
    overweight_bounds,
    plotkin_distance_corollary,
    plotkin_field,
    plotkin_homogeneous,
    plotkin_overweight,
    sphere_packing_overweight,
)
from ringcode.core.bounds import all_inapplicable


class TestPlotkin:
    @pytest.mark.parametrize("q, n, d, value", [(2, 4, 3, 3), (4, 3, 3, 4), (3, 2, 2, 3)])
    def test_field(self, q, n, d, value):
        report = plotkin_field(q, n, d)
        assert report.applicable
        assert report.value == value
        assert report.relation == "M ≤"

    def test_field_hypothesis_fails(self):
        report = plotkin_field(2, 4, 2)
        assert not report.applicable
        assert report.reason == "d ≤ (q−1)n/q"
        assert plotkin_field(2, 4, 5).reason == "d > n"

    def test_field_needs_prime_power(self):
        with pytest.raises(ParameterError):
            plotkin_field(6, 3, 3)

    @pytest.mark.parametrize("n, d, value", [(2, 3, 3), (2, 4, 2), (2, "5/2", 5)])
    def test_homogeneous(self, n, d, value):
        assert plotkin_homogeneous(1, n, d).value == value

    def test_homogeneous_hypothesis_fails(self):
        report = plotkin_homogeneous(1, 3, 3)
        assert not report.applicable
        assert report.reason == "d ≤ γn"

    def test_overweight(self, z4, z8):
        assert plotkin_overweight(z4, 2, 3).value == 3
        report = plotkin_overweight(z8, 2, 4)
        assert report.value == 4
        assert report.integer_bound == 4
        assert report.params["eta"] == "3/2"

    def test_overweight_fractional_value(self, z8):
        report = plotkin_overweight(z8, 1, 2)
        assert report.value == 4
        report = plotkin_overweight(z8, 2, F(7, 2))
        assert report.value == 7
        assert plotkin_overweight(z8, 3, 5).integer_bound == 10

    def test_overweight_hypothesis_fails(self, z4):
        report = plotkin_overweight(z4, 3, 3)
        assert not report.applicable
        assert report.reason == "d ≤ nη"

    def test_overweight_ring_errors(self, z6):
        with pytest.raises(NotLocalRingError):
            plotkin_overweight(z6, 2, 3)
        with pytest.raises(FieldRingError):
            plotkin_overweight(build_ring("Z3"), 2, 3)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_z4_overweight_equals_homogeneous(self, z4, n):
        for d in range(0, 2 * n + 1):
            ours = plotkin_overweight(z4, n, d)
            theirs = plotkin_homogeneous(1, n, d)
            assert ours.applicable == theirs.applicable
            assert ours.value == theirs.value

    @pytest.mark.parametrize("M, value", [(2, 4), (16, F(32, 15))])
    def test_distance_corollary(self, z4, M, value):
        report = plotkin_distance_corollary(z4, 2, M)
        assert report.value == value
        assert report.relation == "d ≤"

    def test_distance_corollary_z8(self, z8):
        assert plotkin_distance_corollary(z8, 1, 3).value == F(9, 4)
        with pytest.raises(ParameterError):
            plotkin_distance_corollary(z8, 1, 1)


class TestSpherePacking:
    def test_odd_distance(self, z4):
        report = sphere_packing_overweight(z4, 2, 3)
        assert report.value == F(16, 5)
        assert report.integer_bound == 3
        assert report.note is None
        assert report.extra["ball_volume"] == "5"

    def test_larger_distance(self, z4):
        report = sphere_packing_overweight(z4, 2, 5)
        assert report.value == F(16, 11)
        assert report.integer_bound == 1

    def test_even_distance_notes_radius(self, z4):
        report = sphere_packing_overweight(z4, 2, 4)
        assert report.value == F(16, 5)
        assert "⌊(d−1)/2⌋ = 1" in report.note

    def test_trivial_distance(self, z4):
        assert sphere_packing_overweight(z4, 2, 1).value == 16

    def test_distance_below_one(self, z4):
        with pytest.raises(ParameterError):
            sphere_packing_overweight(z4, 2, 0)


class TestGilbertVarshamov:
    @pytest.mark.parametrize("d, value, integer", [(1, 16, 16), (2, F(16, 5), 4), (3, F(16, 11), 2)])
    def test_values(self, z4, d, value, integer):
        report = gilbert_varshamov_overweight(z4, 2, d)
        assert report.value == value
        assert report.integer_bound == integer
        assert report.relation == "M ≥"

    def test_zero_distance(self, z4):
        report = gilbert_varshamov_overweight(z4, 2, 0)
        assert report.value == 16
        assert report.note

    def test_fractional_distance_uses_strict_ball(self, z4):
        # W(x) < 3/2 means W(x) <= 1
        assert gilbert_varshamov_overweight(z4, 2, F(3, 2)).value == F(16, 5)

    def test_distance_out_of_range(self, z4):
        with pytest.raises(ParameterError):
            gilbert_varshamov_overweight(z4, 2, 5)

    def test_lower_never_exceeds_upper(self, z8):
        for n in (1, 2, 3):
            for d in range(1, 2 * n + 1):
                lower = gilbert_varshamov_overweight(z8, n, d).integer_bound
                upper = sphere_packing_overweight(z8, n, d).integer_bound
                assert lower <= upper


class TestJohnson:
    def test_second_condition_on_boundary(self):
        report = johnson_homogeneous(4, 4, 1, F(3, 4))
        assert report.applicable
        assert report.extra == {"A": "1/16", "conditions": "ii"}
        assert report.value == 16
        assert report.relation == "L ≤"

    def test_smallest_case(self):
        report = johnson_homogeneous(1, 1, 1, 0)
        assert report.extra["conditions"] == "ii"
        assert report.value == 1

    @pytest.mark.parametrize("rho", [0, F(1, 2), 1])
    def test_first_condition(self, rho):
        report = johnson_homogeneous(2, 4, 1, rho)
        assert report.extra["conditions"] == "i"
        assert report.value == 8

    def test_both_conditions(self):
        report = johnson_homogeneous(1, 2, 1, 0)
        assert report.extra["conditions"] == "i+ii"

    def test_neither_condition(self):
        report = johnson_homogeneous(4, 4, 1, 1)
        assert not report.applicable
        assert report.extra["conditions"] == "none"

    @pytest.mark.parametrize(
        "args",
        [(0, 1, 1, 0), (2, 2, 0, 0), (2, 2, 1, -1), (2, 2, 1, 2)],
        ids=["n", "gamma", "negative-rho", "rho-above-gamma"],
    )
    def test_invalid_parameters(self, args):
        with pytest.raises(ParameterError):
            johnson_homogeneous(*args)

    def test_refined_values(self):
        assert johnson_refined(4, 4, 1, F(3, 4)).value == 16
        assert johnson_refined(4, 4, 1, F(1, 2)).value == 4
        assert not johnson_refined(4, 4, 1, 1).applicable

    def test_refined_never_exceeds_plain(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            n = int(rng.integers(1, 9))
            d = F(int(rng.integers(1, 4 * n + 1)), int(rng.integers(1, 3)))
            gamma = F(int(rng.integers(1, 9)), int(rng.integers(1, 5)))
            rho = gamma * F(int(rng.integers(0, 11)), 10)
            plain = johnson_homogeneous(n, d, gamma, rho)
            if "ii" not in plain.extra["conditions"]:
                continue
            refined = johnson_refined(n, d, gamma, rho)
            assert refined.applicable
            assert 1 <= refined.value <= plain.value

    def test_exact_decision_matches_high_precision(self):
        rng = np.random.default_rng(7)
        checked = 0
        for _ in range(1000):
            n = int(rng.integers(1, 9))
            d = F(int(rng.integers(1, 4 * n + 1)), int(rng.integers(1, 4)))
            gamma = F(int(rng.integers(1, 13)), int(rng.integers(1, 7)))
            rho = gamma * F(int(rng.integers(0, 21)), 20)
            report = johnson_homogeneous(n, d, gamma, rho)

            discriminant = (gamma - d / n) * gamma + F(1, n * n)
            if discriminant < 0:
                expected = False
            else:
                root = sympy.sqrt(sympy.Rational(discriminant.numerator, discriminant.denominator))
                threshold = sympy.N(sympy.Rational(gamma.numerator, gamma.denominator) - root, 40)
                gap = threshold - sympy.Rational(rho.numerator, rho.denominator)
                if abs(gap) < sympy.Float("1e-30", 40) and gap != 0:
                    continue
                expected = bool(gap >= 0)
            assert ("ii" in report.extra["conditions"]) == expected
            checked += 1
        assert checked > 800


class TestCollections:
    def test_overweight_bounds_z4(self, z4):
        reports = {r.name: r for r in overweight_bounds(z4, 2, 3)}
        assert list(reports) == [
            "plotkin_overweight",
            "sphere_packing_overweight",
            "gilbert_varshamov_overweight",
        ]
        assert reports["plotkin_overweight"].integer_bound == 3
        assert reports["sphere_packing_overweight"].integer_bound == 3
        assert reports["gilbert_varshamov_overweight"].integer_bound == 2

    def test_overweight_bounds_with_list_size(self, z4):
        names = [r.name for r in overweight_bounds(z4, 2, 3, M=16)]
        assert "plotkin_distance_corollary" in names

    def test_non_local_ring_gives_failed_row(self, z6):
        reports = overweight_bounds(z6, 2, 3)
        assert not reports[0].applicable
        assert "not a local ring" in reports[0].reason
        assert reports[-1].applicable

    def test_field_adds_hamming_plotkin(self):
        reports = {r.name: r for r in overweight_bounds(build_ring("GF(4)"), 3, 3)}
        assert not reports["plotkin_overweight"].applicable
        assert reports["plotkin_field"].value == 4

    def test_grid(self, z4):
        rows = bound_grid(z4, [1, 2], [1, 2, 3])
        assert len(rows) == 6
        assert [r.params["n"] for r in rows] == ["1", "1", "1", "2", "2", "2"]
        assert [r.applicable for r in rows] == [False, True, True, False, False, True]

    def test_homogeneous_grid_uses_gamma(self, z4):
        rows = bound_grid(z4, [2], [3, 4], name="plotkin_homogeneous", gamma=F(1, 2))
        assert [r.value for r in rows] == [F(3, 2), F(4, 3)]
        assert {r.params["gamma"] for r in rows} == {"1/2"}
        default = bound_grid(z4, [2], [3, 4], name="plotkin_homogeneous")
        assert [r.value for r in default] == [3, 2]
        with pytest.raises(ParameterError):
            bound_grid(z4, [2], [3], name="plotkin_homogeneous", gamma=0)

    def test_grid_unknown_bound(self, z4):
        with pytest.raises(ParameterError):
            bound_grid(z4, [1], [1], name="hamming")

    def test_all_inapplicable(self, z4):
        assert all_inapplicable([plotkin_overweight(z4, 3, 3)])
        assert not all_inapplicable(overweight_bounds(z4, 2, 3))
        assert not all_inapplicable([])

    def test_to_dict(self, z4):
        data = sphere_packing_overweight(z4, 2, 3).to_dict()
        assert data["value"] == {"num": 16, "den": 5}
        assert data["integer_bound"] == 3
        assert data["extra"] == {"ball_volume": "5"}
        assert "note" not in data
