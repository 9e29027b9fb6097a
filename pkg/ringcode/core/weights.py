"""Weight functions on finite rings.

Weights are exact-rational tables over ring elements, extended additively
to words. For vectorised scans every table also carries an integer copy
scaled by the common denominator, so comparisons stay exact.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import numpy as np
import sympy

from ringcode.core.errors import (
    FieldRingError,
    InvalidWeightError,
    NotLocalRingError,
    NotResidueRingError,
    ParameterError,
)
from ringcode.core.ring import FiniteRing, Word
from ringcode.utils.helpers import format_rational, lcm_of_denominators, parse_rational

WEIGHT_NAMES = ("hamming", "lee", "overweight", "homogeneous", "custom")


@dataclass(frozen=True, eq=False)
class WeightFunction:
    """A weight w: R -> Q>=0 with w(0) = 0, extended additively to R^n."""

    name: str
    ring: FiniteRing
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.ring.order:
            raise InvalidWeightError(
                f"{self.name}: {len(self.values)} values for a ring of order {self.ring.order}"
            )
        if self.values[self.ring.zero] != 0:
            raise InvalidWeightError(f"{self.name}: weight of 0 must be 0")
        negative = [x for x, value in enumerate(self.values) if value < 0]
        if negative:
            raise InvalidWeightError(
                f"{self.name}: negative weight at {self.ring.labels[negative[0]]}"
            )

    def __call__(self, x: int) -> Fraction:
        return self.values[x]

    @cached_property
    def gamma(self) -> Fraction:
        """Average value over R."""
        return Fraction(sum(self.values), self.ring.order)

    @cached_property
    def max_weight(self) -> Fraction:
        return max(self.values)

    @cached_property
    def scale(self) -> int:
        """Common denominator of the table."""
        return lcm_of_denominators(self.values)

    @cached_property
    def scaled(self) -> np.ndarray:
        """Integer table values * scale."""
        table = np.array(
            [int(v * self.scale) for v in self.values],
            dtype=np.int64,
        )
        table.setflags(write=False)
        return table

    @cached_property
    def is_symmetric(self) -> bool:
        """w(x) == w(-x) for every x."""
        return bool(np.array_equal(self.scaled, self.scaled[self.ring.neg]))

    def word_weight(self, word: Word) -> Fraction:
        return sum((self.values[x] for x in word), Fraction(0))

    def from_scaled(self, total: int) -> Fraction:
        return Fraction(int(total), self.scale)

    def at_most(self, radius: Fraction) -> int:
        """Largest scaled total whose weight is <= radius."""
        return (Fraction(radius) * self.scale).__floor__()

    def at_least(self, bound: Fraction) -> int:
        """Smallest scaled total whose weight is >= bound."""
        return (Fraction(bound) * self.scale).__ceil__()

    def oracle(self) -> DistanceOracle:
        return DistanceOracle(self)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ring": self.ring.name,
            "gamma": format_rational(self.gamma),
            "max_weight": format_rational(self.max_weight),
            "weights": [format_rational(v) for v in self.values],
        }


@dataclass(frozen=True)
class DistanceOracle:
    """d(x, y) = w(x - y), coordinatewise and summed."""

    weight: WeightFunction

    def distance(self, x: Word, y: Word) -> Fraction:
        if len(x) != len(y):
            raise ParameterError("words of different length")
        sub = self.weight.ring.sub
        return self.weight.word_weight(tuple(int(sub[a, b]) for a, b in zip(x, y)))

    __call__ = distance


def _as_weight(ring: FiniteRing, name: str, values: Iterable[Fraction | int]) -> WeightFunction:
    return WeightFunction(name=name, ring=ring, values=tuple(Fraction(v) for v in values))


def hamming(ring: FiniteRing) -> WeightFunction:
    """0 at 0, 1 elsewhere."""
    return _as_weight(ring, "hamming", (0 if x == ring.zero else 1 for x in ring.elements))


def lee(ring: FiniteRing) -> WeightFunction:
    """Lee weight min(x, m - x) on Z_m."""
    m = ring.residue_modulus
    if m is None:
        raise NotResidueRingError(f"the Lee weight is defined on Z_m only, not on {ring.name}")
    return _as_weight(ring, "lee", (min(x, m - x) for x in ring.elements))


def overweight(ring: FiniteRing) -> WeightFunction:
    """0 at 0, 1 on units, 2 on nonzero nonunits."""
    return _as_weight(
        ring,
        "overweight",
        (0 if x == ring.zero else 1 if ring.is_unit(x) else 2 for x in ring.elements),
    )


def custom(ring: FiniteRing, values: Sequence[Fraction | int | str], name: str = "custom") -> WeightFunction:
    return _as_weight(ring, name, (parse_rational(v) for v in values))


# === Homogeneous weights ===


@dataclass(frozen=True)
class HomogeneousSolution:
    """Outcome of the exact homogeneous-weight solve.

    status: unique | none | underdetermined | negative
    """

    ring: FiniteRing
    gamma: Fraction
    status: str
    constraint_set: str
    dimension: int = 0
    weight: WeightFunction | None = None
    values: tuple[Fraction, ...] | None = None

    @property
    def is_unique(self) -> bool:
        return self.status == "unique"

    def describe(self) -> str:
        if self.status == "unique":
            return f"unique solution ({self.constraint_set})"
        if self.status == "none":
            return f"no solution ({self.constraint_set})"
        if self.status == "negative":
            return f"unique solution has negative entries, not a weight ({self.constraint_set})"
        return f"solution space of dimension {self.dimension} ({self.constraint_set})"

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.name,
            "gamma": format_rational(self.gamma),
            "status": self.status,
            "constraint_set": self.constraint_set,
            "dimension": self.dimension,
            "weights": [format_rational(v) for v in self.values] if self.values else None,
        }


def solve_homogeneous(
    ring: FiniteRing,
    gamma: Fraction | int | str = 1,
    principal_only: bool = False,
) -> HomogeneousSolution:
    """Solve for the homogeneous weight of average value gamma.

    One unknown per associate class; constraints w(0) = 0 and, for every
    nonzero left ideal I (or every nonzero principal one), sum_{x in I} w(x) = gamma |I|.
    """
    gamma = parse_rational(gamma)
    if gamma <= 0:
        raise ParameterError("gamma must be positive")

    constraint_set = "principal-left-ideals" if principal_only else "all-left-ideals"
    if principal_only:
        ideals = sorted(
            {ring.principal_left_ideal(x) for x in ring.elements if x != ring.zero},
            key=lambda ideal: (len(ideal), sorted(ideal)),
        )
    else:
        ideals = [ideal for ideal in ring.left_ideals if len(ideal) > 1]

    classes = ring.associate_classes
    class_of = {x: ci for ci, members in enumerate(classes) for x in members}
    k = len(classes)

    rows: list[list[int]] = []
    rhs: list[sympy.Rational] = []
    zero_row = [0] * k
    zero_row[class_of[ring.zero]] = 1
    rows.append(zero_row)
    rhs.append(sympy.Rational(0))
    for ideal in ideals:
        row = [0] * k
        for x in ideal:
            row[class_of[x]] += 1
        rows.append(row)
        rhs.append(sympy.Rational(gamma.numerator, gamma.denominator) * len(ideal))

    augmented = sympy.Matrix(rows).row_join(sympy.Matrix(rhs))
    reduced, pivots = augmented.rref()

    if k in pivots:
        return HomogeneousSolution(ring, gamma, "none", constraint_set)
    dimension = k - len(pivots)
    if dimension > 0:
        return HomogeneousSolution(ring, gamma, "underdetermined", constraint_set, dimension)

    per_class = [Fraction(0)] * k
    for row, column in enumerate(pivots):
        value = reduced[row, k]
        per_class[column] = Fraction(int(value.p), int(value.q))
    values = tuple(per_class[class_of[x]] for x in ring.elements)

    if any(v < 0 for v in values):
        return HomogeneousSolution(ring, gamma, "negative", constraint_set, values=values)
    weight = WeightFunction(name="homogeneous", ring=ring, values=values)
    return HomogeneousSolution(ring, gamma, "unique", constraint_set, weight=weight, values=values)


def homogeneous(ring: FiniteRing, gamma: Fraction | int | str = 1) -> WeightFunction:
    """The homogeneous weight, raising when the system is not uniquely solvable."""
    solution = solve_homogeneous(ring, gamma)
    if solution.weight is None:
        raise InvalidWeightError(f"homogeneous weight on {ring.name}: {solution.describe()}")
    return solution.weight


def weight_by_name(ring: FiniteRing, name: str, gamma: Fraction | int | str = 1) -> WeightFunction:
    if name == "hamming":
        return hamming(ring)
    if name == "lee":
        return lee(ring)
    if name == "overweight":
        return overweight(ring)
    if name == "homogeneous":
        return homogeneous(ring, gamma)
    raise ParameterError(f"unknown weight {name!r}; expected one of hamming, lee, overweight, homogeneous")


# === Averages ===


def average_weight(w: WeightFunction, subset: Iterable[int]) -> Fraction:
    """Exact average of w over a nonempty subset of R."""
    members = list(subset)
    if not members:
        raise ParameterError("average over an empty set")
    return Fraction(sum((w.values[x] for x in members), Fraction(0)), len(members))


def _require_local(ring: FiniteRing) -> frozenset[int]:
    locality = ring.locality
    if not locality.is_local or locality.maximal_ideal is None:
        raise NotLocalRingError(f"{ring.name} is not a local ring")
    return locality.maximal_ideal


def ideal_average_formula(ring: FiniteRing, ideal: Iterable[int]) -> Fraction:
    """Closed-form average overweight of an ideal of a local ring."""
    jacobson = _require_local(ring)
    size = len(set(ideal))
    if size <= 1:
        return Fraction(0)
    if size == ring.order:
        return Fraction(ring.order + len(jacobson) - 2, ring.order)
    return 2 * (1 - Fraction(1, size))


def eta(ring: FiniteRing) -> Fraction:
    """eta = 2(1 - 1/|J|), the average overweight of the maximal ideal."""
    jacobson = _require_local(ring)
    if len(jacobson) < 2:
        raise FieldRingError(
            f"{ring.name} is a field (|J| = 1): the overweight is the Hamming weight, "
            "use the field Plotkin bound"
        )
    return 2 * (1 - Fraction(1, len(jacobson)))


# === Triangle inequality ===


@dataclass(frozen=True)
class TriangleCheck:
    holds: bool
    counterexample: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        return {"holds": self.holds, "counterexample": self.counterexample}


def triangle_holds(w: WeightFunction) -> TriangleCheck:
    """Exhaustive check of w(x + y) <= w(x) + w(y); first violation in canonical order."""
    lhs = w.scaled[w.ring.add]
    rhs = w.scaled[:, None] + w.scaled[None, :]
    bad = np.argwhere(lhs > rhs)
    if bad.size == 0:
        return TriangleCheck(True)
    x, y = bad[0]
    return TriangleCheck(False, (int(x), int(y)))


# === CSV interface ===


def write_weight_csv(w: WeightFunction, path: str | Path | None = None) -> str:
    """Render `index,label,weight` rows; also written to `path` when given."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["index", "label", "weight"])
    for x in w.ring.elements:
        writer.writerow([x, w.ring.labels[x], format_rational(w.values[x])])
    text = buffer.getvalue()
    if path is not None:
        Path(path).write_text(text)
    return text


def read_weight_csv(ring: FiniteRing, source: str | Path, name: str = "custom") -> WeightFunction:
    """Load a custom weight table from a CSV file path or CSV text."""
    text = Path(source).read_text() if isinstance(source, Path) or "\n" not in str(source) else str(source)
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["index", "label", "weight"]:
        raise InvalidWeightError("weight CSV must have header index,label,weight")

    values: dict[int, Fraction] = {}
    for row in reader:
        index = int(row["index"])
        if not 0 <= index < ring.order:
            raise InvalidWeightError(f"index {index} out of range for {ring.name}")
        if row["label"].strip() != ring.labels[index]:
            raise InvalidWeightError(
                f"row {index}: label {row['label']!r} does not match {ring.labels[index]!r}"
            )
        if index in values:
            raise InvalidWeightError(f"index {index} appears more than once")
        values[index] = parse_rational(row["weight"])
    if sorted(values) != list(ring.elements):
        raise InvalidWeightError(f"weight CSV must list every element of {ring.name} exactly once")
    return _as_weight(ring, name, (values[x] for x in ring.elements))
