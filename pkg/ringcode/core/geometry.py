"""Spheres, balls and distances in R^n."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from ringcode.core.config import get_config
from ringcode.core.errors import EnumerationCapExceeded, InvalidCodeError, ParameterError
from ringcode.core.models import CodeFile
from ringcode.core.ring import FiniteRing, Word, build_ring
from ringcode.core.weights import WeightFunction
from ringcode.utils.helpers import chunk_ranges, ordered_map, parse_rational


@dataclass(frozen=True, eq=False)
class Code:
    """A (not necessarily linear) code: a nonempty set of words of length n.

    Words are stored deduplicated and sorted lexicographically by element index.
    """

    ring: FiniteRing
    n: int
    words: tuple[Word, ...]
    duplicates_dropped: int = 0

    @classmethod
    def from_words(cls, ring: FiniteRing, words: Iterable[Iterable[int]], n: int | None = None) -> Code:
        raw = [tuple(int(x) for x in word) for word in words]
        if not raw:
            raise InvalidCodeError("a code needs at least one word")
        length = len(raw[0]) if n is None else n
        if length < 1:
            raise InvalidCodeError("code length must be at least 1")
        for word in raw:
            if len(word) != length:
                raise InvalidCodeError(f"word {word} does not have length {length}")
            if any(not 0 <= x < ring.order for x in word):
                raise InvalidCodeError(f"word {word} has an index outside {ring.name}")
        unique = sorted(set(raw))
        return cls(ring=ring, n=length, words=tuple(unique), duplicates_dropped=len(raw) - len(unique))

    @property
    def size(self) -> int:
        return len(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.ring.name == other.ring.name and self.n == other.n and self.words == other.words

    def __hash__(self) -> int:
        return hash((self.ring.name, self.n, self.words))

    @cached_property
    def array(self) -> np.ndarray:
        words = np.array(self.words, dtype=np.int64).reshape(len(self.words), self.n)
        words.setflags(write=False)
        return words

    def labelled(self) -> list[tuple[str, ...]]:
        return [tuple(self.ring.labels[x] for x in word) for word in self.words]


@dataclass(frozen=True)
class BallQuery:
    """Ball {x : w(x - center) <= radius}."""

    center: Word
    radius: Fraction
    weight: WeightFunction = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "radius", parse_rational(self.radius))
        if self.radius < 0:
            raise ParameterError("ball radius must be nonnegative")


# === Enumeration ===


def _space_size(ring: FiniteRing, n: int, cap: int | None) -> int:
    if n < 1:
        raise ParameterError("word length n must be at least 1")
    cap = get_config().enumeration.cap if cap is None else cap
    total = ring.order**n
    if total > cap:
        raise EnumerationCapExceeded(
            f"{ring.name}^{n} has {total} words, above the enumeration cap {cap}"
        )
    return total


def word_rank(ring: FiniteRing, word: Word) -> int:
    """Position of a word in lexicographic order (first coordinate most significant)."""
    rank = 0
    for x in word:
        rank = rank * ring.order + x
    return rank


def enumerate_words(ring: FiniteRing, n: int, cap: int | None = None) -> np.ndarray:
    """All of R^n as a (|R|^n, n) array in lexicographic order."""
    total = _space_size(ring, n, cap)
    return _words_in_range(ring.order, n, 0, total)


def _words_in_range(q: int, n: int, start: int, stop: int) -> np.ndarray:
    digits = np.unravel_index(np.arange(start, stop, dtype=np.int64), (q,) * n)
    return np.stack(digits, axis=1).astype(np.int64)


def _scaled_offsets(w: WeightFunction, n: int, center: Word, start: int, stop: int) -> np.ndarray:
    """Scaled w(x - center) for the words with ranks in [start, stop)."""
    words = _words_in_range(w.ring.order, n, start, stop)
    sub = w.ring.sub
    total = np.zeros(stop - start, dtype=np.int64)
    for i in range(n):
        total += w.scaled[sub[words[:, i], center[i]]]
    return total


def _scan_ball(
    w: WeightFunction,
    n: int,
    center: Word,
    radius: Fraction,
    cap: int | None,
    workers: int | None,
) -> list[np.ndarray]:
    """Ranks of ball members, one array per chunk, in rank order."""
    if len(center) != n:
        raise ParameterError(f"center has length {len(center)}, expected {n}")
    cfg = get_config().enumeration
    total = _space_size(w.ring, n, cap)
    limit = w.at_most(radius)
    workers = cfg.workers if workers is None else workers

    def scan(bounds: tuple[int, int]) -> np.ndarray:
        start, stop = bounds
        offsets = _scaled_offsets(w, n, center, start, stop)
        return start + np.flatnonzero(offsets <= limit)

    return ordered_map(scan, chunk_ranges(total, cfg.chunk_size), workers)


def ball_enumerate(
    query: BallQuery,
    n: int,
    cap: int | None = None,
    workers: int | None = None,
) -> tuple[Word, ...]:
    """Exact members of a ball by full scan, in lexicographic order."""
    chunks = _scan_ball(query.weight, n, tuple(query.center), query.radius, cap, workers)
    ranks = np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.int64)
    digits = np.unravel_index(ranks, (query.weight.ring.order,) * n)
    return tuple(tuple(int(d[i]) for d in digits) for i in range(len(ranks)))


def ball_volume_bruteforce(
    w: WeightFunction,
    n: int,
    radius: Fraction | int | str,
    center: Word | None = None,
    cap: int | None = None,
    workers: int | None = None,
) -> int:
    """Ball size counted by full scan."""
    radius = parse_rational(radius)
    if radius < 0:
        raise ParameterError("ball radius must be nonnegative")
    center = (w.ring.zero,) * n if center is None else tuple(center)
    return sum(len(chunk) for chunk in _scan_ball(w, n, center, radius, cap, workers))


# === Closed forms for the overweight ===


def sphere_size_overweight(ring: FiniteRing, n: int, t: int) -> int:
    """Number of words of overweight exactly t.

    Coefficient of z^t in (1 + u z + v z^2)^n: choose the t - 2l unit
    positions and the l nonunit positions.
    """
    if n < 1:
        raise ParameterError("word length n must be at least 1")
    if not 0 <= t <= 2 * n:
        raise ParameterError(f"sphere radius t={t} outside [0, {2 * n}]")
    u, v = ring.u, ring.v
    count = 0
    for nonunits in range(t // 2 + 1):
        unit_positions = t - 2 * nonunits
        rest = n - unit_positions
        if unit_positions > n or rest < nonunits:
            continue
        count += math.comb(n, unit_positions) * math.comb(rest, nonunits) * u**unit_positions * v**nonunits
    return count


def ball_volume_overweight(ring: FiniteRing, n: int, e: int | Fraction) -> int:
    """Exact size of the overweight ball of radius e around any center."""
    e = parse_rational(e)
    if e < 0:
        raise ParameterError("ball radius must be nonnegative")
    top = min(math.floor(e), 2 * n)
    return sum(sphere_size_overweight(ring, n, t) for t in range(top + 1))


# === Code distances ===


def distance_matrix(code: Code, w: WeightFunction) -> np.ndarray:
    """M x M matrix of w(x_i - x_j) in units of 1/w.scale."""
    if w.ring is not code.ring and w.ring.name != code.ring.name:
        raise ParameterError(f"weight on {w.ring.name} used with a code over {code.ring.name}")
    words = code.array
    differences = w.ring.sub[words[:, None, :], words[None, :, :]]
    return w.scaled[differences].sum(axis=2)


def min_distance(code: Code, w: WeightFunction) -> Fraction | None:
    """Minimum distance over distinct pairs; None for a singleton code."""
    if code.size < 2:
        return None
    matrix = distance_matrix(code, w)
    off_diagonal = matrix[~np.eye(code.size, dtype=bool)]
    return w.from_scaled(int(off_diagonal.min()))


def pairwise_distance_sum(code: Code, w: WeightFunction) -> Fraction:
    """Sum of d(x, y) over ordered pairs, diagonal included."""
    return w.from_scaled(int(distance_matrix(code, w).sum()))


def max_word_weight(code: Code, w: WeightFunction) -> Fraction:
    return max(w.word_weight(word) for word in code.words)


# === Code files ===


def load_code(source: str | Path, ring: FiniteRing | None = None) -> Code:
    """Read a code file (path or JSON text). Duplicate words are dropped and counted."""
    path = Path(source) if not str(source).lstrip().startswith("{") else None
    text = path.read_text() if path is not None else str(source)
    try:
        document = CodeFile.model_validate_json(text)
    except ValidationError as e:
        raise InvalidCodeError(f"invalid code file: {e.errors()[0]['msg']}") from e
    ring = build_ring(document.ring) if ring is None else ring
    if ring.name != document.ring:
        raise InvalidCodeError(f"code file is over {document.ring}, not {ring.name}")
    return Code.from_words(ring, document.words, n=document.n)


def code_document(code: Code) -> CodeFile:
    return CodeFile(ring=code.ring.name, n=code.n, words=[list(word) for word in code.words])


def save_code(code: Code, path: str | Path | None = None) -> str:
    """Serialize to the JSON code format; also written to `path` when given."""
    text = code_document(code).model_dump_json(indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
