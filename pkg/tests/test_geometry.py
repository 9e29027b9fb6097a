"""Tests for balls, spheres, distances and code files."""

from __future__ import annotations

import json
from fractions import Fraction as F

import pytest

from ringcode.core import (
    BallQuery,
    Code,
    EnumerationCapExceeded,
    InvalidCodeError,
    ParameterError,
    ball_enumerate,
    ball_volume_bruteforce,
    ball_volume_overweight,
    build_ring,
    distance_matrix,
    enumerate_words,
    load_code,
    min_distance,
    overweight,
    pairwise_distance_sum,
    save_code,
    sphere_size_overweight,
)
from ringcode.core.geometry import max_word_weight, word_rank
from ringcode.core.weights import homogeneous

from .conftest import TEST_RINGS


class TestEnumeration:
    def test_lexicographic_order(self, z4):
        words = enumerate_words(z4, 2)
        assert words.shape == (16, 2)
        assert words[:3].tolist() == [[0, 0], [0, 1], [0, 2]]
        assert words[-1].tolist() == [3, 3]

    def test_word_rank(self, z4):
        assert word_rank(z4, (0, 0)) == 0
        assert word_rank(z4, (2, 3)) == 11

    def test_cap(self, z4):
        with pytest.raises(EnumerationCapExceeded):
            enumerate_words(z4, 3, cap=10)

    def test_cap_from_config(self, z4, isolated_config):
        isolated_config.enumeration.cap = 15
        with pytest.raises(EnumerationCapExceeded):
            ball_volume_bruteforce(overweight(z4), 2, 1)


class TestOverweightSpheres:
    @pytest.mark.parametrize("t, size", [(0, 1), (1, 4), (2, 6), (3, 4), (4, 1)])
    def test_z4_spheres(self, z4, t, size):
        assert sphere_size_overweight(z4, 2, t) == size

    @pytest.mark.parametrize("e, volume", [(0, 1), (1, 5), (2, 11), (4, 16), (10, 16), ("3/2", 5)])
    def test_z4_balls(self, z4, e, volume):
        assert ball_volume_overweight(z4, 2, e) == volume

    def test_radius_outside_range(self, z4):
        with pytest.raises(ParameterError):
            sphere_size_overweight(z4, 2, 5)
        with pytest.raises(ParameterError):
            ball_volume_overweight(z4, 2, -1)

    @pytest.mark.parametrize("spec", TEST_RINGS)
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_spheres_partition_the_space(self, spec, n):
        ring = build_ring(spec)
        assert sum(sphere_size_overweight(ring, n, t) for t in range(2 * n + 1)) == ring.order**n

    @pytest.mark.parametrize("spec", TEST_RINGS)
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_closed_form_matches_scan(self, spec, n):
        ring = build_ring(spec)
        w = overweight(ring)
        for e in range(2 * n + 1):
            assert ball_volume_overweight(ring, n, e) == ball_volume_bruteforce(w, n, e)

    def test_volume_is_translation_invariant(self, z4):
        w = overweight(z4)
        for center in [(1, 2), (3, 3), (2, 0)]:
            assert ball_volume_bruteforce(w, 2, 2, center=center) == 11


class TestBalls:
    def test_overweight_ball_around_zero(self, z4):
        query = BallQuery(center=(0,), radius=1, weight=overweight(z4))
        assert ball_enumerate(query, 1) == ((0,), (1,), (3,))

    def test_overweight_ball_around_unit(self, z4):
        query = BallQuery(center=(1,), radius=1, weight=overweight(z4))
        assert ball_enumerate(query, 1) == ((0,), (1,), (2,))

    def test_fractional_radius(self, z6):
        query = BallQuery(center=(0,), radius=F(1, 2), weight=homogeneous(z6))
        assert ball_enumerate(query, 1) == ((0,), (1,), (5,))

    def test_negative_radius(self, z4):
        with pytest.raises(ParameterError):
            BallQuery(center=(0,), radius=-1, weight=overweight(z4))

    def test_center_length(self, z4):
        query = BallQuery(center=(0,), radius=1, weight=overweight(z4))
        with pytest.raises(ParameterError):
            ball_enumerate(query, 2)

    def test_chunking_and_workers_do_not_change_results(self, z8, isolated_config):
        isolated_config.enumeration.chunk_size = 7
        w = homogeneous(z8)
        query = BallQuery(center=(1, 2, 3), radius=3, weight=w)
        serial = ball_enumerate(query, 3, workers=1)
        threaded = ball_enumerate(query, 3, workers=4)
        assert serial == threaded
        assert list(serial) == sorted(serial)
        assert len(serial) == ball_volume_bruteforce(w, 3, 3, center=(1, 2, 3), workers=3)


class TestDistances:
    def test_min_distance(self, z4):
        w = overweight(z4)
        assert min_distance(Code.from_words(z4, [(0, 0), (2, 2)]), w) == 4
        assert min_distance(Code.from_words(z4, [(0, 0), (2, 1)]), w) == 3
        assert min_distance(Code.from_words(z4, [(0,), (1,), (2,), (3,)]), w) == 1

    def test_singleton_has_no_distance(self, z4):
        assert min_distance(Code.from_words(z4, [(1, 1)]), overweight(z4)) is None

    def test_pairwise_sum(self, z4):
        w = overweight(z4)
        assert pairwise_distance_sum(Code.from_words(z4, [(0,), (1,), (2,), (3,)]), w) == 16
        assert pairwise_distance_sum(Code.from_words(z4, [(0, 0), (2, 2)]), w) == 8

    def test_pairwise_sum_dominates_minimum(self, z8):
        w = homogeneous(z8)
        code = Code.from_words(z8, [(0, 0), (1, 3), (4, 4), (6, 1), (2, 7)])
        m = code.size
        assert pairwise_distance_sum(code, w) >= m * (m - 1) * min_distance(code, w)

    def test_fractional_distances(self, z6):
        code = Code.from_words(z6, [(0,), (1,)])
        w = homogeneous(z6)
        assert distance_matrix(code, w).tolist() == [[0, 1], [1, 0]]
        assert min_distance(code, w) == F(1, 2)

    def test_ring_mismatch(self, z4, z8):
        with pytest.raises(ParameterError):
            distance_matrix(Code.from_words(z4, [(0,)]), overweight(z8))

    def test_max_word_weight(self, z4):
        code = Code.from_words(z4, [(0, 0), (2, 1), (1, 3)])
        assert max_word_weight(code, overweight(z4)) == 3


class TestCodes:
    def test_words_are_sorted_and_deduplicated(self, z4):
        code = Code.from_words(z4, [(2, 2), (0, 1), (2, 2)])
        assert code.words == ((0, 1), (2, 2))
        assert code.duplicates_dropped == 1
        assert len(code) == 2

    @pytest.mark.parametrize(
        "words",
        [[], [(0, 1), (1,)], [(0, 4)]],
        ids=["empty", "ragged", "out-of-range"],
    )
    def test_invalid_words(self, z4, words):
        with pytest.raises(InvalidCodeError):
            Code.from_words(z4, words)

    def test_labelled(self):
        ring = build_ring("GF(4)")
        code = Code.from_words(ring, [(2, 3)])
        assert code.labelled() == [("x", "x+1")]

    def test_save_and_load(self, z4, tmp_path):
        code = Code.from_words(z4, [(0, 0), (1, 3), (2, 2)])
        path = tmp_path / "code.json"
        save_code(code, path)
        assert json.loads(path.read_text()) == {"ring": "Z4", "n": 2, "words": [[0, 0], [1, 3], [2, 2]]}
        assert load_code(path) == code

    def test_load_counts_duplicates(self):
        code = load_code('{"ring": "Z4", "n": 1, "words": [[1], [1], [3]]}')
        assert code.words == ((1,), (3,))
        assert code.duplicates_dropped == 1

    @pytest.mark.parametrize(
        "text",
        [
            '{"ring": "Z4", "n": 0, "words": [[0]]}',
            '{"ring": "Z4", "n": 1, "words": []}',
            '{"ring": "Z4", "n": 1, "words": [[-1]]}',
            '{"ring": "Z4", "n": 2, "words": [[0]]}',
            '{"ring": "Z4", "n": 1, "words": [[4]]}',
        ],
    )
    def test_load_rejects_invalid_files(self, text):
        with pytest.raises(InvalidCodeError):
            load_code(text)

    def test_load_checks_ring(self, z8):
        with pytest.raises(InvalidCodeError):
            load_code('{"ring": "Z4", "n": 1, "words": [[1]]}', ring=z8)
