"""Direct checkers for the inequalities behind the bounds.

Every checker returns a CheckReport carrying exact left, middle and right
hand sides. Randomized suites draw one generator per trial from a single
master seed, so results do not depend on the worker count.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ringcode.core.bounds import johnson_homogeneous, johnson_refined
from ringcode.core.config import RingcodeConfig, get_config
from ringcode.core.errors import DistributionError, InvalidWeightError, ParameterError, RingAxiomError
from ringcode.core.geometry import (
    Code,
    ball_volume_overweight,
    enumerate_words,
    max_word_weight,
    min_distance,
    pairwise_distance_sum,
    sphere_size_overweight,
)
from ringcode.core.ring import FiniteRing, check_ring_axioms
from ringcode.core.search import list_profile
from ringcode.core.weights import (
    WeightFunction,
    average_weight,
    eta,
    ideal_average_formula,
    overweight,
    solve_homogeneous,
)
from ringcode.utils.helpers import (
    format_rational,
    lcm_of_denominators,
    ordered_map,
    parse_rational,
    rational_dict,
    spawn_generators,
)


# === Distributions ===


@dataclass(frozen=True, eq=False)
class Distribution:
    """Exact probability distribution on the elements of a ring."""

    ring: FiniteRing
    probabilities: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.probabilities) != self.ring.order:
            raise DistributionError(
                f"{len(self.probabilities)} probabilities for a ring of order {self.ring.order}"
            )
        if any(p < 0 for p in self.probabilities):
            raise DistributionError("probabilities must be nonnegative")
        if sum(self.probabilities) != 1:
            raise DistributionError(f"probabilities sum to {sum(self.probabilities)}, not 1")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for x, p in enumerate(self.probabilities) if p)

    def __getitem__(self, x: int) -> Fraction:
        return self.probabilities[x]

    def numerators(self) -> tuple[list[int], int]:
        """Integer numerators over a common denominator."""
        den = lcm_of_denominators(self.probabilities)
        return [int(p * den) for p in self.probabilities], den

    @classmethod
    def from_weights(cls, ring: FiniteRing, weights: Sequence[int | Fraction]) -> Distribution:
        total = sum(Fraction(v) for v in weights)
        if total <= 0:
            raise DistributionError("weights must have a positive sum")
        return cls(ring, tuple(Fraction(v) / total for v in weights))

    @classmethod
    def uniform(cls, ring: FiniteRing, subset: Iterable[int] | None = None) -> Distribution:
        members = set(ring.elements if subset is None else subset)
        if not members:
            raise DistributionError("uniform distribution over an empty set")
        return cls.from_weights(ring, [1 if x in members else 0 for x in ring.elements])

    @classmethod
    def point_mass(cls, ring: FiniteRing, x: int) -> Distribution:
        return cls.from_weights(ring, [1 if y == x else 0 for y in ring.elements])

    @classmethod
    def random(
        cls,
        ring: FiniteRing,
        rng: np.random.Generator,
        subset: Iterable[int] | None = None,
        high: int = 1000,
    ) -> Distribution:
        """Normalised random integer vector on `subset` (all of R by default)."""
        members = sorted(set(ring.elements if subset is None else subset))
        draws = rng.integers(0, high + 1, size=len(members))
        if not draws.any():
            draws[rng.integers(0, len(members))] = 1
        weights = [0] * ring.order
        for x, value in zip(members, draws):
            weights[x] = int(value)
        return cls.from_weights(ring, weights)

    @classmethod
    def coordinate(cls, code: Code, i: int) -> Distribution:
        """Empirical distribution of coordinate i over the codewords."""
        if not 0 <= i < code.n:
            raise ParameterError(f"coordinate {i} outside [0, {code.n})")
        counts = [0] * code.ring.order
        for word in code.words:
            counts[word[i]] += 1
        return cls.from_weights(code.ring, counts)

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.name,
            "probabilities": [format_rational(p) for p in self.probabilities],
        }


# === Reports ===


@dataclass(frozen=True)
class CheckReport:
    """lhs <= mid <= rhs, or lhs <= rhs when mid is None."""

    name: str
    status: str
    lhs: Fraction | None = None
    mid: Fraction | None = None
    rhs: Fraction | None = None
    reason: str | None = None
    params: dict[str, str] = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def applicable(self) -> bool:
        return self.status in ("pass", "fail")

    def summary(self) -> str:
        if not self.applicable:
            return f"{self.name}: {self.status} ({self.reason})"
        sides = [self.lhs, self.mid, self.rhs] if self.mid is not None else [self.lhs, self.rhs]
        chain = " ≤ ".join(format_rational(side) for side in sides)
        suffix = f" ({self.reason})" if self.reason else ""
        return f"{self.name}: {self.status.upper()} {chain}{suffix}"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "params": dict(self.params),
            "lhs": rational_dict(self.lhs),
            "mid": rational_dict(self.mid),
            "rhs": rational_dict(self.rhs),
            "reason": self.reason,
            "details": dict(self.details),
            "summary": self.summary(),
        }


def _chain(
    name: str,
    lhs: Fraction,
    mid: Fraction | None,
    rhs: Fraction,
    params: dict[str, str],
    details: dict | None = None,
) -> CheckReport:
    holds = lhs <= mid <= rhs if mid is not None else lhs <= rhs
    equalities = []
    if mid is not None and lhs == mid:
        equalities.append("left equality")
    if (mid if mid is not None else lhs) == rhs:
        equalities.append("right equality")
    return CheckReport(
        name=name,
        status="pass" if holds else "fail",
        lhs=lhs,
        mid=mid,
        rhs=rhs,
        reason=", ".join(equalities) or None,
        params=params,
        details=details or {},
    )


def _quadratic_form(w: WeightFunction, distribution: Distribution) -> Fraction:
    """Sum over x, y of w(x - y) P(x) P(y), in exact integers."""
    numerators, den = distribution.numerators()
    support = sorted(distribution.support)
    p = np.array([numerators[x] for x in support], dtype=object)
    distances = w.scaled[w.ring.sub[np.ix_(support, support)]].astype(object)
    return Fraction(int(p @ distances @ p), den * den * w.scale)


# === Single checks ===


def check_hamming_average(subset: Iterable[int], distribution: Distribution) -> CheckReport:
    """Sum over x, y in I of w_H(x - y) P(x) P(y) <= 1 - 1/|I|."""
    members = frozenset(subset)
    if not members:
        raise ParameterError("empty subset")
    outside = distribution.support - members
    if outside:
        raise DistributionError(
            f"distribution puts mass on {distribution.ring.labels[min(outside)]}, outside the subset"
        )
    lhs = 1 - sum((distribution[x] ** 2 for x in members), Fraction(0))
    rhs = 1 - Fraction(1, len(members))
    return _chain("hamming_average", lhs, None, rhs, {"ring": distribution.ring.name, "I_size": str(len(members))})


def check_probineq(ring: FiniteRing, distribution: Distribution) -> CheckReport:
    """Sum over x, y of W(x - y) P(x) P(y) <= eta."""
    bound = eta(ring)
    lhs = _quadratic_form(overweight(ring), distribution)
    return _chain("probineq", lhs, None, bound, {"ring": ring.name, "eta": format_rational(bound)})


def check_pair_sum(code: Code) -> CheckReport:
    """M(M-1)d <= sum of D(x, y) over ordered pairs <= M^2 n eta."""
    ring = code.ring
    bound = eta(ring)
    if code.size < 2:
        raise ParameterError("the pair-sum inequality needs at least two codewords")
    w = overweight(ring)
    M, d = code.size, min_distance(code, w)
    params = {"ring": ring.name, "n": str(code.n), "M": str(M), "d": format_rational(d)}
    return _chain(
        "pair_sum",
        M * (M - 1) * d,
        pairwise_distance_sum(code, w),
        M * M * code.n * bound,
        params,
    )


def _homogeneous_for(ring: FiniteRing, gamma: Fraction, w: WeightFunction | None) -> WeightFunction | None:
    """The uniquely solvable homogeneous weight, checked against `w` when given."""
    solution = solve_homogeneous(ring, gamma)
    if solution.weight is None:
        return None
    if w is not None and w.values != solution.weight.values:
        raise InvalidWeightError(f"{w.name} is not the homogeneous weight of {ring.name} with γ={gamma}")
    return solution.weight


def check_maxwt(code: Code, w: WeightFunction | None = None, gamma: Fraction | int | str = 1) -> CheckReport:
    """M(M-1)d <= sum of wt(x - y) <= 2 M^2 ω - M^2 ω^2 / (γ n), when ω <= γ n."""
    gamma = parse_rational(gamma)
    ring = code.ring
    params = {"ring": ring.name, "n": str(code.n), "M": str(code.size), "gamma": format_rational(gamma)}
    weight = _homogeneous_for(ring, gamma, w)
    if weight is None:
        return CheckReport("maxwt", "skipped", reason="homogeneous weight unavailable", params=params)
    if code.size < 2:
        raise ParameterError("the max-weight inequality needs at least two codewords")

    omega = max_word_weight(code, weight)
    params["omega"] = format_rational(omega)
    scale = gamma * code.n
    if omega > scale:
        return CheckReport("maxwt", "not-applicable", reason="ω > γn", params=params)

    M, d = code.size, min_distance(code, weight)
    params["d"] = format_rational(d)
    return _chain(
        "maxwt",
        M * (M - 1) * d,
        pairwise_distance_sum(code, weight),
        2 * M * M * omega - M * M * omega * omega / scale,
        params,
    )


def verify_johnson(
    code: Code,
    w: WeightFunction | None = None,
    gamma: Fraction | int | str = 1,
    rho: Fraction | int | str = 0,
) -> CheckReport:
    """Compare the list profile at radius ρn with the refined and plain Johnson list bounds.

    lhs is the profile maximum, mid the refined bound, rhs ⌊dγn⌋.
    """
    gamma, rho = parse_rational(gamma), parse_rational(rho)
    ring, n = code.ring, code.n
    params = {"ring": ring.name, "n": str(n), "M": str(code.size), "gamma": format_rational(gamma), "rho": format_rational(rho)}
    weight = _homogeneous_for(ring, gamma, w)
    if weight is None:
        return CheckReport("johnson", "skipped", reason="homogeneous weight unavailable", params=params)
    d = min_distance(code, weight)
    if d is None:
        return CheckReport("johnson", "not-applicable", reason="singleton code", params=params)
    params["d"] = format_rational(d)

    plain = johnson_homogeneous(n, d, gamma, rho)
    refined = johnson_refined(n, d, gamma, rho)
    details = {"johnson": plain.to_dict(), "refined": refined.to_dict()}
    if not plain.applicable:
        return CheckReport("johnson", "not-applicable", reason=plain.reason, params=params, details=details)

    profile = list_profile(code, weight, rho * n)
    details["profile"] = profile.to_dict()
    mid = Fraction(refined.integer_bound) if refined.applicable else Fraction(plain.integer_bound)
    return _chain("johnson", Fraction(profile.max_list_size), mid, Fraction(plain.integer_bound), params, details)


# === Structural checks ===


def check_distance_axioms(
    w: WeightFunction,
    n: int,
    samples: int | None = None,
    seed: int = 0,
    exhaustive_limit: int = 4096,
) -> CheckReport:
    """Metric axioms of d(x, y) = w(x - y) on R^n.

    With translation invariance the triangle inequality reduces to
    w(a + b) <= w(a) + w(b); that is checked on every pair when |R|^n is at
    most `exhaustive_limit`, otherwise on random triples of words.
    """
    ring = w.ring
    q = ring.order
    samples = get_config().ring.axiom_sample_triples if samples is None else samples
    params = {"ring": ring.name, "weight": w.name, "n": str(n)}

    if q**n <= exhaustive_limit:
        words = enumerate_words(ring, n)
        weights = w.scaled[words].sum(axis=1)
        powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)

        zero_rank = int(np.dot([ring.zero] * n, powers))
        zero_weight = np.flatnonzero((weights == 0) & (np.arange(len(words)) != zero_rank))
        if zero_weight.size:
            return _axiom_failure("identity", params, words[zero_weight[0]])

        negated = ring.neg[words] @ powers
        asymmetric = np.flatnonzero(weights != weights[negated])
        if asymmetric.size:
            return _axiom_failure("symmetry", params, words[asymmetric[0]])

        for a in range(len(words)):
            sums = ring.add[words[a][None, :], words] @ powers
            bad = np.flatnonzero(weights[sums] > weights[a] + weights)
            if bad.size:
                return _axiom_failure("triangle", params, words[a], words[bad[0]])
        params["mode"] = "exhaustive"
        return CheckReport("distance_axioms", "pass", params=params, details={"pairs": len(words) ** 2})

    rng = np.random.default_rng(seed)
    x, y, z = (rng.integers(0, q, size=(samples, n)) for _ in range(3))

    def distance(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return w.scaled[ring.sub[a, b]].sum(axis=1)

    dxy, dyx, dyz, dxz = distance(x, y), distance(y, x), distance(y, z), distance(x, z)
    checks = {
        "identity": (dxy == 0) != (x == y).all(axis=1),
        "symmetry": dxy != dyx,
        "triangle": dxz > dxy + dyz,
    }
    for axiom, bad in checks.items():
        index = np.flatnonzero(bad)
        if index.size:
            return _axiom_failure(axiom, params, x[index[0]], y[index[0]], z[index[0]])
    params["mode"] = "sampled"
    return CheckReport("distance_axioms", "pass", params=params, details={"triples": samples})


def _axiom_failure(axiom: str, params: dict[str, str], *words: np.ndarray) -> CheckReport:
    witness = [[int(x) for x in word] for word in words]
    return CheckReport(
        "distance_axioms",
        "fail",
        reason=f"{axiom} fails",
        params=params,
        details={"axiom": axiom, "witness": witness},
    )


def check_ideal_average_lemma(ring: FiniteRing) -> CheckReport:
    """Closed-form ideal averages of the overweight against direct averages.

    lhs is the largest ideal average, rhs the average over the maximal ideal.
    """
    w = overweight(ring)
    rows = []
    mismatches = []
    for ideal in ring.left_ideals:
        direct = average_weight(w, ideal)
        formula = ideal_average_formula(ring, ideal)
        rows.append({"size": len(ideal), "direct": format_rational(direct), "formula": format_rational(formula)})
        if direct != formula:
            mismatches.append(sorted(ideal))

    params = {"ring": ring.name}
    details = {"ideals": rows}
    if mismatches:
        details["mismatches"] = mismatches
        return CheckReport("ideal_average", "fail", reason="closed form differs", params=params, details=details)

    jacobson = ring.locality.maximal_ideal
    if len(jacobson) < 2:
        return CheckReport("ideal_average", "pass", reason="field: |J| = 1, no extremal comparison", params=params, details=details)
    largest = max(average_weight(w, ideal) for ideal in ring.left_ideals)
    return _chain("ideal_average", largest, None, average_weight(w, jacobson), params, details)


def check_ball_formula(ring: FiniteRing, n: int, cap: int | None = None) -> CheckReport:
    """Closed-form overweight ball volumes against counts over all of R^n, for every radius."""
    words = enumerate_words(ring, n, cap=cap)
    weights = overweight(ring).scaled[words].sum(axis=1)
    counts = np.bincount(weights, minlength=2 * n + 1)
    rows = []
    failures = []
    for e in range(2 * n + 1):
        brute = int(counts[: e + 1].sum())
        formula = ball_volume_overweight(ring, n, e)
        rows.append({"e": e, "formula": formula, "bruteforce": brute, "sphere": sphere_size_overweight(ring, n, e)})
        if brute != formula:
            failures.append(e)
    params = {"ring": ring.name, "n": str(n)}
    details = {"radii": rows}
    if failures:
        return CheckReport("ball_formula", "fail", reason=f"radius {failures[0]} differs", params=params, details=details)
    return CheckReport("ball_formula", "pass", params=params, details=details)


def check_ring(ring: FiniteRing, seed: int = 0) -> CheckReport:
    """Ring axioms as a report rather than an exception."""
    try:
        check_ring_axioms(ring, seed=seed)
    except RingAxiomError as e:
        return CheckReport("ring_axioms", "fail", reason=str(e), params={"ring": ring.name})
    return CheckReport("ring_axioms", "pass", params={"ring": ring.name})


# === Randomized suites ===


@dataclass
class SuiteSummary:
    """Counts of a randomized verification run."""

    name: str
    ring: str
    trials: int
    seed: int
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0
    equalities: int = 0
    first_failure: CheckReport | None = None
    reason: str | None = None

    @property
    def status(self) -> str:
        if self.reason:
            return "skipped"
        return "fail" if self.failed else "pass"

    def record(self, report: CheckReport) -> None:
        if report.status == "pass":
            self.passed += 1
            if report.reason:
                self.equalities += 1
        elif report.status == "fail":
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = report
        else:
            self.not_applicable += 1

    def summary(self) -> str:
        if self.reason:
            return f"{self.name} on {self.ring}: skipped ({self.reason})"
        return (
            f"{self.name} on {self.ring}: {self.passed}/{self.trials} passed, "
            f"{self.failed} failed, {self.not_applicable} not applicable"
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ring": self.ring,
            "status": self.status,
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
            "not_applicable": self.not_applicable,
            "equalities": self.equalities,
            "first_failure": self.first_failure.to_dict() if self.first_failure else None,
            "reason": self.reason,
        }


class VerificationSuite:
    """Randomized falsification runs for the probability, pair-sum and max-weight inequalities."""

    def __init__(
        self,
        config: RingcodeConfig | None = None,
        seed: int | None = None,
        trials: int | None = None,
        workers: int | None = None,
        progress_callback: Callable[[str], None] | None = None,
    ):
        self.config = config or get_config()
        self.seed = self.config.verify.seed if seed is None else seed
        self.trials = self.config.verify.trials if trials is None else trials
        self.workers = self.config.verify.workers if workers is None else workers
        self.progress_callback = progress_callback

    def _log(self, message: str) -> None:
        if self.progress_callback:
            self.progress_callback(message)

    def _run(self, name: str, ring: FiniteRing, trial: Callable[[np.random.Generator], CheckReport]) -> SuiteSummary:
        generators = spawn_generators(self.seed, self.trials)
        reports = ordered_map(trial, generators, self.workers)
        summary = SuiteSummary(name=name, ring=ring.name, trials=self.trials, seed=self.seed)
        for report in reports:
            summary.record(report)
        self._log(summary.summary())
        return summary

    def _random_code(self, ring: FiniteRing, rng: np.random.Generator, n_max: int, m_max: int) -> Code:
        n = int(rng.integers(1, n_max + 1))
        space = ring.order**n
        size = int(rng.integers(2, min(m_max, space) + 1))
        ranks = rng.choice(space, size=size, replace=False)
        words = np.stack(np.unravel_index(ranks, (ring.order,) * n), axis=1)
        return Code.from_words(ring, words.tolist(), n=n)

    def run_probineq(self, ring: FiniteRing) -> SuiteSummary:
        eta(ring)

        def trial(rng: np.random.Generator) -> CheckReport:
            return check_probineq(ring, Distribution.random(ring, rng))

        summary = self._run("probineq", ring, trial)
        summary.record(check_probineq(ring, Distribution.uniform(ring)))
        summary.trials += 1
        return summary

    def run_pair_sum(self, ring: FiniteRing, n_max: int = 3, m_max: int = 8) -> SuiteSummary:
        eta(ring)

        def trial(rng: np.random.Generator) -> CheckReport:
            return check_pair_sum(self._random_code(ring, rng, n_max, m_max))

        return self._run("pair_sum", ring, trial)

    def run_maxwt(self, ring: FiniteRing, gamma: Fraction | int | str = 1, n_max: int = 3, m_max: int = 8) -> SuiteSummary:
        gamma = parse_rational(gamma)
        weight = _homogeneous_for(ring, gamma, None)
        if weight is None:
            summary = SuiteSummary("maxwt", ring.name, 0, self.seed, reason="homogeneous weight unavailable")
            self._log(summary.summary())
            return summary

        def trial(rng: np.random.Generator) -> CheckReport:
            return check_maxwt(self._random_code(ring, rng, n_max, m_max), weight, gamma)

        return self._run("maxwt", ring, trial)

    def run_all(self, ring: FiniteRing) -> list[SuiteSummary]:
        """Every suite that applies to the ring; non-local rings skip the overweight ones."""
        summaries = []
        if ring.is_local and not ring.is_field:
            summaries.append(self.run_probineq(ring))
            summaries.append(self.run_pair_sum(ring))
        else:
            reason = "field ring" if ring.is_field else "not a local ring"
            summaries.append(SuiteSummary("probineq", ring.name, 0, self.seed, reason=reason))
            summaries.append(SuiteSummary("pair_sum", ring.name, 0, self.seed, reason=reason))
        summaries.append(self.run_maxwt(ring))
        return summaries
