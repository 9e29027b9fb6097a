"""Tests for weight functions and the homogeneous-weight solver."""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from ringcode.core import (
    FieldRingError,
    InvalidWeightError,
    NotLocalRingError,
    NotResidueRingError,
    ParameterError,
    average_weight,
    build_ring,
    custom,
    eta,
    hamming,
    ideal_average_formula,
    lee,
    overweight,
    read_weight_csv,
    solve_homogeneous,
    triangle_holds,
    write_weight_csv,
)
from ringcode.core.weights import homogeneous, weight_by_name

from .conftest import LOCAL_RINGS


class TestBuiltinWeights:
    def test_overweight_z4(self, z4):
        assert overweight(z4).values == (0, 1, 2, 1)

    def test_overweight_z8(self, z8):
        assert overweight(z8).values == (0, 1, 2, 1, 2, 1, 2, 1)

    def test_overweight_on_field_is_hamming(self):
        gf4 = build_ring("GF(4)")
        assert overweight(gf4).values == hamming(gf4).values

    def test_lee(self, z6):
        assert lee(z6).values == (0, 1, 2, 3, 2, 1)

    def test_lee_needs_residue_ring(self):
        with pytest.raises(NotResidueRingError):
            lee(build_ring("GF(4)"))

    def test_hamming_product(self):
        assert hamming(build_ring("Z2xZ2")).values == (0, 1, 1, 1)

    def test_gamma_and_scale(self, z4, z6):
        assert overweight(z4).gamma == 1
        w = homogeneous(z6)
        assert w.scale == 2
        assert w.scaled.tolist() == [0, 1, 3, 4, 3, 1]

    def test_symmetry(self):
        z3 = build_ring("Z3")
        assert overweight(z3).is_symmetric
        assert not custom(z3, [0, 1, 2]).is_symmetric

    def test_distance_oracle(self, z4):
        oracle = overweight(z4).oracle()
        assert oracle((0, 0), (2, 1)) == 3
        assert oracle((1, 3), (1, 3)) == 0
        with pytest.raises(ParameterError):
            oracle((0,), (0, 0))

    def test_radius_conversion(self, z6):
        w = homogeneous(z6)
        assert w.at_most(F(3, 4)) == 1
        assert w.at_least(F(3, 4)) == 2
        assert w.from_scaled(3) == F(3, 2)

    @pytest.mark.parametrize(
        "values",
        [[1, 1, 1, 1], [0, -1, 1, 1], [0, 1, 1]],
        ids=["nonzero-at-zero", "negative", "wrong-length"],
    )
    def test_invalid_tables(self, z4, values):
        with pytest.raises(InvalidWeightError):
            custom(z4, values)

    def test_weight_by_name(self, z4):
        assert weight_by_name(z4, "homogeneous", gamma=2).values == (0, 2, 4, 2)
        with pytest.raises(ParameterError):
            weight_by_name(z4, "euclid")


class TestHomogeneous:
    def test_z4_matches_overweight(self, z4):
        solution = solve_homogeneous(z4)
        assert solution.is_unique
        assert solution.values == overweight(z4).values

    def test_z6(self, z6):
        solution = solve_homogeneous(z6)
        assert solution.values == (0, F(1, 2), F(3, 2), 2, F(3, 2), F(1, 2))

    def test_z8(self, z8):
        assert solve_homogeneous(z8).values == (0, 1, 1, 1, 2, 1, 1, 1)

    def test_product_ring_has_a_zero_entry(self):
        solution = solve_homogeneous(build_ring("Z2xZ2"))
        assert solution.status == "unique"
        assert solution.values == (0, 2, 2, 0)

    def test_gamma_scales(self, z4):
        assert solve_homogeneous(z4, gamma="1/2").values == (0, F(1, 2), 1, F(1, 2))

    def test_gamma_must_be_positive(self, z4):
        with pytest.raises(ParameterError):
            solve_homogeneous(z4, gamma=0)

    def test_principal_constraints_agree_on_residue_rings(self, z6):
        solution = solve_homogeneous(z6, principal_only=True)
        assert solution.constraint_set == "principal-left-ideals"
        assert solution.values == solve_homogeneous(z6).values

    @pytest.mark.parametrize("spec", LOCAL_RINGS)
    def test_average_is_gamma(self, spec):
        w = homogeneous(build_ring(spec), gamma=3)
        assert w.gamma == 3

    def test_to_dict(self, z6):
        data = solve_homogeneous(z6).to_dict()
        assert data["status"] == "unique"
        assert data["weights"] == ["0", "1/2", "3/2", "2", "3/2", "1/2"]


class TestAverages:
    def test_eta(self, z4, z8):
        assert eta(z4) == 1
        assert eta(z8) == F(3, 2)
        assert eta(build_ring("Z9")) == F(4, 3)

    def test_eta_errors(self, z6):
        with pytest.raises(NotLocalRingError):
            eta(z6)
        with pytest.raises(FieldRingError):
            eta(build_ring("Z3"))

    def test_ideal_average_formula(self, z8):
        assert ideal_average_formula(z8, {0}) == 0
        assert ideal_average_formula(z8, {0, 4}) == 1
        assert ideal_average_formula(z8, {0, 2, 4, 6}) == F(3, 2)
        assert ideal_average_formula(z8, range(8)) == F(5, 4)

    @pytest.mark.parametrize("spec", LOCAL_RINGS)
    def test_formula_matches_direct_average(self, spec):
        ring = build_ring(spec)
        w = overweight(ring)
        for ideal in ring.left_ideals:
            assert average_weight(w, ideal) == ideal_average_formula(ring, ideal)

    def test_average_of_empty_set(self, z4):
        with pytest.raises(ParameterError):
            average_weight(overweight(z4), [])


class TestTriangle:
    def test_z4_homogeneous_holds(self, z4):
        assert triangle_holds(homogeneous(z4)).holds

    def test_z6_homogeneous_fails(self, z6):
        check = triangle_holds(homogeneous(z6))
        assert not check.holds
        assert check.counterexample == (1, 1)

    @pytest.mark.parametrize("m", range(2, 31))
    def test_residue_rings_fail_iff_divisible_by_six(self, m):
        w = homogeneous(build_ring(f"Z{m}"))
        assert triangle_holds(w).holds == (m % 6 != 0)


class TestCsv:
    def test_write(self, z6):
        text = write_weight_csv(homogeneous(z6))
        assert text.splitlines()[:3] == ["index,label,weight", "0,0,0", "1,1,1/2"]

    def test_read_back(self, z6, tmp_path):
        path = tmp_path / "w.csv"
        write_weight_csv(homogeneous(z6), path)
        loaded = read_weight_csv(z6, path)
        assert loaded.values == homogeneous(z6).values
        assert loaded.name == "custom"

    def test_product_labels(self):
        ring = build_ring("Z2xZ2")
        text = 'index,label,weight\n0,"(0,0)",0\n1,"(0,1)",1\n2,"(1,0)",1\n3,"(1,1)",2\n'
        assert read_weight_csv(ring, text).values == (0, 1, 1, 2)

    def test_bad_header(self, z4):
        with pytest.raises(InvalidWeightError):
            read_weight_csv(z4, "i,l,w\n0,0,0\n")

    def test_label_mismatch(self, z4):
        with pytest.raises(InvalidWeightError):
            read_weight_csv(z4, "index,label,weight\n0,0,0\n1,2,1\n2,2,2\n3,3,1\n")

    def test_missing_rows(self, z4):
        with pytest.raises(InvalidWeightError):
            read_weight_csv(z4, "index,label,weight\n0,0,0\n1,1,1\n")

    def test_duplicate_rows(self, z4):
        with pytest.raises(InvalidWeightError, match="more than once"):
            read_weight_csv(z4, "index,label,weight\n0,0,0\n1,1,1\n1,1,2\n2,2,2\n3,3,1\n")
