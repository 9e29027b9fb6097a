"""Exact-rational code-size and list-size bounds.

Every bound returns a BoundReport. A bound whose hypothesis fails is a
report with applicable=False and a reason; it never carries a value.
Exceptions are reserved for broken preconditions (non-local ring, M < 2,
rho > gamma and the like).
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from ringcode.core.errors import FieldRingError, NotLocalRingError, ParameterError
from ringcode.core.geometry import ball_volume_overweight
from ringcode.core.ring import FiniteRing
from ringcode.core.weights import eta
from ringcode.utils.helpers import format_rational, parse_rational, rational_dict


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one bound evaluation.

    kind: upper (M <=), lower (M >=), list (L <=) or distance (d <=).
    integer_bound is the floor of value for upper/list/distance bounds and
    its ceiling for lower bounds.
    """

    name: str
    kind: str
    params: dict[str, str]
    applicable: bool
    reason: str | None = None
    value: Fraction | None = None
    integer_bound: int | None = None
    note: str | None = None
    extra: dict[str, str] = field(default_factory=dict)

    @property
    def relation(self) -> str:
        return {"upper": "M ≤", "lower": "M ≥", "list": "L ≤", "distance": "d ≤"}[self.kind]

    def summary(self) -> str:
        if not self.applicable:
            return f"{self.name}: n/a ({self.reason})"
        return (
            f"{self.name}: {self.relation} {format_rational(self.value)}"
            f" (integer {self.integer_bound})"
        )

    def to_dict(self) -> dict:
        document = {
            "name": self.name,
            "kind": self.kind,
            "params": dict(self.params),
            "applicable": self.applicable,
            "reason": self.reason,
            "value": rational_dict(self.value),
            "integer_bound": self.integer_bound,
        }
        if self.note:
            document["note"] = self.note
        if self.extra:
            document["extra"] = dict(self.extra)
        return document


def _params(**values: object) -> dict[str, str]:
    rendered = {}
    for key, value in values.items():
        if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
            rendered[key] = format_rational(value)
        else:
            rendered[key] = str(value)
    return rendered


def _applies(name: str, kind: str, params: dict[str, str], value: Fraction, **kw) -> BoundReport:
    integer = math.ceil(value) if kind == "lower" else math.floor(value)
    return BoundReport(name, kind, params, True, value=value, integer_bound=integer, **kw)


def _fails(name: str, kind: str, params: dict[str, str], reason: str, **kw) -> BoundReport:
    return BoundReport(name, kind, params, False, reason=reason, **kw)


def _check_length(n: int) -> None:
    if n < 1:
        raise ParameterError("code length n must be at least 1")


# === Plotkin family ===


def plotkin_field(q: int, n: int, d: Fraction | int) -> BoundReport:
    """Hamming-metric Plotkin bound over an alphabet of size q."""
    _check_length(n)
    d = parse_rational(d)
    factors = sympy.factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise ParameterError(f"q={q} is not a prime power")
    params = _params(q=q, n=n, d=d)
    if d > n:
        return _fails("plotkin_field", "upper", params, "d > n")
    threshold = Fraction((q - 1) * n, q)
    if d <= threshold:
        return _fails("plotkin_field", "upper", params, "d ≤ (q−1)n/q")
    return _applies("plotkin_field", "upper", params, d / (d - threshold))


def plotkin_homogeneous(gamma: Fraction | int | str, n: int, d: Fraction | int | str) -> BoundReport:
    """Plotkin bound for a homogeneous weight of average gamma."""
    _check_length(n)
    gamma, d = parse_rational(gamma), parse_rational(d)
    if gamma <= 0:
        raise ParameterError("gamma must be positive")
    params = _params(gamma=gamma, n=n, d=d)
    if d <= gamma * n:
        return _fails("plotkin_homogeneous", "upper", params, "d ≤ γn")
    return _applies("plotkin_homogeneous", "upper", params, d / (d - gamma * n))


def plotkin_overweight(ring: FiniteRing, n: int, d: Fraction | int | str) -> BoundReport:
    """Plotkin bound for the overweight distance on a local ring with |J| >= 2."""
    _check_length(n)
    d = parse_rational(d)
    eta_value = eta(ring)
    params = _params(ring=ring.name, n=n, d=d, eta=eta_value)
    if d <= n * eta_value:
        return _fails("plotkin_overweight", "upper", params, "d ≤ nη")
    return _applies("plotkin_overweight", "upper", params, d / (d - n * eta_value))


def plotkin_distance_corollary(ring: FiniteRing, n: int, M: int) -> BoundReport:
    """Largest minimum overweight distance an (n, M) code can have."""
    _check_length(n)
    if M < 2:
        raise ParameterError("the distance bound needs M ≥ 2")
    eta_value = eta(ring)
    params = _params(ring=ring.name, n=n, M=M, eta=eta_value)
    return _applies("plotkin_distance_corollary", "distance", params, Fraction(M * n) * eta_value / (M - 1))


# === Sphere-packing and Gilbert-Varshamov ===


def sphere_packing_overweight(ring: FiniteRing, n: int, d: Fraction | int | str) -> BoundReport:
    """|C| <= |R|^n / |B_e| with e = floor((d - 1) / 2)."""
    _check_length(n)
    d = parse_rational(d)
    if d < 1:
        raise ParameterError("sphere packing needs d ≥ 1")
    e = math.floor((d - 1) / 2)
    volume = ball_volume_overweight(ring, n, e)
    params = _params(ring=ring.name, n=n, d=d, e=e)
    note = None if (d - 1) % 2 == 0 else f"packing radius e = ⌊(d−1)/2⌋ = {e}"
    return _applies(
        "sphere_packing_overweight",
        "upper",
        params,
        Fraction(ring.order**n, volume),
        note=note,
        extra={"ball_volume": str(volume)},
    )


def gilbert_varshamov_overweight(ring: FiniteRing, n: int, d: Fraction | int | str) -> BoundReport:
    """Some code reaches |C| >= |R|^n / |{x : W(x) < d}|."""
    _check_length(n)
    d = parse_rational(d)
    if not 0 <= d <= 2 * n:
        raise ParameterError(f"d={format_rational(d)} outside [0, {2 * n}]")
    params = _params(ring=ring.name, n=n, d=d)
    if d == 0:
        return _applies(
            "gilbert_varshamov_overweight",
            "lower",
            params,
            Fraction(ring.order**n),
            note="d = 0: every code qualifies, the whole space",
        )
    volume = ball_volume_overweight(ring, n, math.ceil(d) - 1)
    return _applies(
        "gilbert_varshamov_overweight",
        "lower",
        params,
        Fraction(ring.order**n, volume),
        extra={"ball_volume": str(volume)},
    )


# === Johnson ===


def _johnson_inputs(n: int, d, gamma, rho) -> tuple[Fraction, Fraction, Fraction]:
    _check_length(n)
    d, gamma, rho = parse_rational(d), parse_rational(gamma), parse_rational(rho)
    if gamma <= 0:
        raise ParameterError("gamma must be positive")
    if rho < 0:
        raise ParameterError("rho must be nonnegative")
    if rho > gamma:
        raise ParameterError("rho > gamma is outside the Johnson theorem")
    return d, gamma, rho


def johnson_discriminant(n: int, d: Fraction, gamma: Fraction) -> Fraction:
    """A = (gamma - d/n) gamma + 1/n^2, the square of gamma minus the threshold radius."""
    return (gamma - d / n) * gamma + Fraction(1, n * n)


def johnson_homogeneous(
    n: int,
    d: Fraction | int | str,
    gamma: Fraction | int | str,
    rho: Fraction | int | str,
) -> BoundReport:
    """List-size bound dγn inside balls of radius ρn.

    Condition (ii), rho <= gamma - sqrt(A), is decided as (gamma - rho)^2 >= A
    with A >= 0, so boundary points stay exact.
    """
    d, gamma, rho = _johnson_inputs(n, d, gamma, rho)
    params = _params(n=n, d=d, gamma=gamma, rho=rho)

    first = gamma * n * (d - gamma * n) >= 1
    discriminant = johnson_discriminant(n, d, gamma)
    second = discriminant >= 0 and (gamma - rho) ** 2 >= discriminant
    conditions = "+".join(name for name, holds in (("i", first), ("ii", second)) if holds)
    extra = {"A": format_rational(discriminant), "conditions": conditions or "none"}

    if not conditions:
        reason = "γn(d−γn) < 1 and ρ > γ − √A"
        return _fails("johnson_homogeneous", "list", params, reason, extra=extra)
    return _applies("johnson_homogeneous", "list", params, d * gamma * n, extra=extra)


def johnson_refined(
    n: int,
    d: Fraction | int | str,
    gamma: Fraction | int | str,
    rho: Fraction | int | str,
) -> BoundReport:
    """List-size bound dγn / ((nγ − ρn)² − nγ(nγ − d)) before relaxation to dγn."""
    d, gamma, rho = _johnson_inputs(n, d, gamma, rho)
    params = _params(n=n, d=d, gamma=gamma, rho=rho)
    denominator = (n * gamma - rho * n) ** 2 - n * gamma * (n * gamma - d)
    extra = {"denominator": format_rational(denominator)}
    if denominator <= 0:
        return _fails("johnson_refined", "list", params, "(nγ − ρn)² ≤ nγ(nγ − d)", extra=extra)
    return _applies("johnson_refined", "list", params, d * gamma * n / denominator, extra=extra)


# === Collections ===


def _guarded(name: str, kind: str, params: dict[str, str], compute: Callable[[], BoundReport]) -> BoundReport:
    """Turn precondition errors into hypothesis-failed rows."""
    try:
        return compute()
    except (NotLocalRingError, FieldRingError, ParameterError) as e:
        return _fails(name, kind, params, str(e))


def overweight_bounds(ring: FiniteRing, n: int, d: Fraction | int | str, M: int | None = None) -> list[BoundReport]:
    """Every overweight bound at one parameter point."""
    d = parse_rational(d)
    base = _params(ring=ring.name, n=n, d=d)
    reports = [
        _guarded("plotkin_overweight", "upper", base, lambda: plotkin_overweight(ring, n, d)),
    ]
    if ring.is_field:
        # the overweight is the Hamming weight on a field
        reports.append(_guarded("plotkin_field", "upper", base, lambda: plotkin_field(ring.order, n, d)))
    if M is not None:
        reports.append(
            _guarded(
                "plotkin_distance_corollary",
                "distance",
                _params(ring=ring.name, n=n, M=M),
                lambda: plotkin_distance_corollary(ring, n, M),
            )
        )
    reports.append(_guarded("sphere_packing_overweight", "upper", base, lambda: sphere_packing_overweight(ring, n, d)))
    reports.append(
        _guarded("gilbert_varshamov_overweight", "lower", base, lambda: gilbert_varshamov_overweight(ring, n, d))
    )
    return reports


GRID_BOUNDS: dict[str, tuple[str, Callable[[FiniteRing, int, Fraction, Fraction], BoundReport]]] = {
    "plotkin_overweight": ("upper", lambda ring, n, d, gamma: plotkin_overweight(ring, n, d)),
    "sphere_packing_overweight": ("upper", lambda ring, n, d, gamma: sphere_packing_overweight(ring, n, d)),
    "gilbert_varshamov_overweight": ("lower", lambda ring, n, d, gamma: gilbert_varshamov_overweight(ring, n, d)),
    "plotkin_homogeneous": ("upper", lambda ring, n, d, gamma: plotkin_homogeneous(gamma, n, d)),
}


def bound_grid(
    ring: FiniteRing,
    n_values: Iterable[int],
    d_values: Iterable[Fraction | int | str],
    name: str = "plotkin_overweight",
    gamma: Fraction | int | str = 1,
) -> list[BoundReport]:
    """One bound over a grid of (n, d), n-major.

    `gamma` is the average of the homogeneous weight for plotkin_homogeneous.
    """
    if name not in GRID_BOUNDS:
        raise ParameterError(f"unknown bound {name!r}; expected one of {', '.join(GRID_BOUNDS)}")
    kind, bound = GRID_BOUNDS[name]
    d_list = [parse_rational(d) for d in d_values]
    gamma = parse_rational(gamma)
    if gamma <= 0:
        raise ParameterError("gamma must be positive")
    rows = []
    for n in n_values:
        for d in d_list:
            params = _params(ring=ring.name, n=n, d=d)
            rows.append(_guarded(name, kind, params, lambda n=n, d=d: bound(ring, n, d, gamma)))
    return rows


def all_inapplicable(reports: Iterable[BoundReport]) -> bool:
    reports = list(reports)
    return bool(reports) and not any(report.applicable for report in reports)


