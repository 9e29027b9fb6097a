"""Finite rings as explicit operation tables.

Every structural question (units, ideals, associates, locality) is answered
by exhaustive scans over the tables, so rings are kept small: the order cap
defaults to 512 and is configurable.

Element order is canonical per constructor:
  - Z_m: residues ascending
  - Z_m[x]/(f) and GF(p^k): coefficient vectors, highest degree most significant
  - products: lexicographic tuples, first factor most significant
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Union

import numpy as np
import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from ringcode.core.config import get_config
from ringcode.core.errors import (
    OrderCapExceeded,
    ReducibleModulusError,
    RingAxiomError,
    RingSpecError,
)

Word = tuple[int, ...]

_X = sympy.Symbol("x")
_ATOM_RE = re.compile(r"GF\((\d+)(?:,([^()]*))?\)|Z(\d+)(?:\[x\]/\(([^()]*)\))?")
_POLY_CHARS_RE = re.compile(r"^[0-9x+\-*^]+$")


# === Ring descriptors ===


def _poly_text(coefficients: tuple[int, ...], times: str = "") -> str:
    """Render ascending coefficients as `2x^2+x+3` (zero polynomial -> `0`).

    Descriptors pass `times="*"` so the text parses back.
    """
    terms = []
    for degree in range(len(coefficients) - 1, -1, -1):
        c = coefficients[degree]
        if c == 0:
            continue
        if degree == 0:
            terms.append(str(c))
            continue
        power = "x" if degree == 1 else f"x^{degree}"
        terms.append(power if c == 1 else f"{c}{times}{power}")
    return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class ResidueAtom:
    """The integer residue ring Z_m."""

    modulus: int

    @property
    def order(self) -> int:
        return self.modulus

    def __str__(self) -> str:
        return f"Z{self.modulus}"


@dataclass(frozen=True)
class GaloisAtom:
    """The finite field GF(q), q a prime power.

    `modulus` holds ascending coefficients mod p when the descriptor names
    one; otherwise the default irreducible polynomial is used.
    """

    size: int
    modulus: tuple[int, ...] | None = None

    @property
    def order(self) -> int:
        return self.size

    def __str__(self) -> str:
        if self.modulus is None:
            return f"GF({self.size})"
        return f"GF({self.size},{_poly_text(self.modulus, times='*')})"


@dataclass(frozen=True)
class QuotientAtom:
    """Z_m[x]/(f) for a monic f, coefficients stored ascending and reduced mod m."""

    modulus: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def order(self) -> int:
        return self.modulus**self.degree

    def __str__(self) -> str:
        return f"Z{self.modulus}[x]/({_poly_text(self.coefficients, times='*')})"


Atom = Union[ResidueAtom, GaloisAtom, QuotientAtom]


@dataclass(frozen=True)
class RingSpec:
    """A parsed ring descriptor: a direct product of one or more atoms."""

    factors: tuple[Atom, ...]

    @property
    def text(self) -> str:
        return "x".join(str(f) for f in self.factors)

    @property
    def order(self) -> int:
        order = 1
        for factor in self.factors:
            order *= factor.order
        return order

    def __str__(self) -> str:
        return self.text


def _prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p^k, or None if q is not a prime power."""
    if q < 2:
        return None
    factors = sympy.factorint(q)
    if len(factors) != 1:
        return None
    ((p, k),) = factors.items()
    return int(p), int(k)


def _parse_modulus_polynomial(text: str, modulus: int) -> tuple[int, ...]:
    """Parse a monic integer polynomial in x, returning ascending coefficients mod m."""
    if not _POLY_CHARS_RE.match(text):
        raise RingSpecError(f"invalid polynomial {text!r}")
    try:
        expr = parse_expr(
            text,
            local_dict={"x": _X},
            transformations=standard_transformations + (convert_xor,),
        )
        poly = sympy.Poly(expr, _X)
    except Exception as e:  # sympy raises several unrelated parse errors
        raise RingSpecError(f"invalid polynomial {text!r}: {e}") from e

    if poly.degree() < 1:
        raise RingSpecError(f"modulus polynomial {text!r} must have degree >= 1")
    descending = poly.all_coeffs()
    if not all(c.is_integer for c in descending):
        raise RingSpecError(f"modulus polynomial {text!r} must have integer coefficients")
    if descending[0] != 1:
        raise RingSpecError(f"modulus polynomial {text!r} must be monic")
    return tuple(int(c) % modulus for c in reversed(descending))


def _make_atom(match: re.Match[str]) -> Atom:
    gf, gf_poly, residue, poly = match.groups()
    if gf is not None:
        q = int(gf)
        pk = _prime_power(q)
        if pk is None:
            raise RingSpecError(f"GF({q}): {q} is not a prime power")
        if gf_poly is None:
            return GaloisAtom(q)
        return GaloisAtom(q, _parse_modulus_polynomial(gf_poly, pk[0]))

    m = int(residue)
    if m < 2:
        raise RingSpecError(f"Z{m}: modulus must be at least 2")
    if poly is None:
        return ResidueAtom(m)
    return QuotientAtom(m, _parse_modulus_polynomial(poly, m))


def parse_ring_spec(text: str) -> RingSpec:
    """Parse the ring-spec mini-language.

    spec := atom | atom "x" spec
    atom := "Z" int | "GF(" int ["," poly] ")" | "Z" int "[x]/(" poly ")"
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise RingSpecError("empty ring spec")

    factors: list[Atom] = []
    pos = 0
    while True:
        match = _ATOM_RE.match(compact, pos)
        if match is None or match.end() == pos:
            raise RingSpecError(
                f"expected Z<m>, GF(<q>[,<poly>]) or Z<m>[x]/(<poly>) at position {pos} in {text!r}"
            )
        factors.append(_make_atom(match))
        pos = match.end()
        if pos == len(compact):
            break
        if compact[pos] != "x":
            raise RingSpecError(f"expected 'x' between factors at position {pos} in {text!r}")
        pos += 1

    return RingSpec(tuple(factors))


# === Operation tables ===


@dataclass(frozen=True)
class _Tables:
    labels: tuple[str, ...]
    add: np.ndarray
    mul: np.ndarray


def _residue_tables(m: int) -> _Tables:
    idx = np.arange(m, dtype=np.int64)
    return _Tables(
        labels=tuple(str(i) for i in range(m)),
        add=(idx[:, None] + idx[None, :]) % m,
        mul=(idx[:, None] * idx[None, :]) % m,
    )


def _quotient_tables(m: int, coefficients: tuple[int, ...]) -> _Tables:
    k = len(coefficients) - 1
    order = m**k
    powers = m ** np.arange(k, dtype=np.int64)
    idx = np.arange(order, dtype=np.int64)
    # digits[e, i] is the coefficient of x^i in element e
    digits = (idx[:, None] // powers[None, :]) % m

    add = ((digits[:, None, :] + digits[None, :, :]) % m) @ powers

    prod = np.zeros((order, order, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
    tail = np.array(coefficients[:k], dtype=np.int64)
    # x^k = -(f_0 + f_1 x + ... + f_{k-1} x^{k-1})
    for t in range(2 * k - 2, k - 1, -1):
        lead = prod[:, :, t] % m
        prod[:, :, t] = 0
        prod[:, :, t - k : t] -= lead[:, :, None] * tail[None, None, :]
    mul = (prod[:, :, :k] % m) @ powers

    labels = tuple(_poly_text(tuple(int(c) for c in row)) for row in digits)
    return _Tables(labels=labels, add=add, mul=mul)


def is_irreducible_mod_p(coefficients: tuple[int, ...], p: int) -> bool:
    """Irreducibility of an ascending-coefficient polynomial over GF(p)."""
    poly = sympy.Poly(list(reversed(coefficients)), _X, modulus=p)
    return bool(poly.is_irreducible)


def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible polynomial of degree k over GF(p), lexicographic order."""
    for tail in itertools.product(range(p), repeat=k):
        coefficients = tuple(reversed(tail)) + (1,)
        if is_irreducible_mod_p(coefficients, p):
            return coefficients
    raise ReducibleModulusError(f"no irreducible polynomial of degree {k} over GF({p})")


def _galois_tables(q: int, modulus: tuple[int, ...] | None = None) -> _Tables:
    p, k = _prime_power(q) or (0, 0)
    if p == 0:
        raise RingSpecError(f"GF({q}): {q} is not a prime power")
    if k == 1 and modulus is None:
        return _residue_tables(p)
    if modulus is None:
        modulus = first_irreducible(p, k)
    modulus = tuple(c % p for c in modulus)
    if len(modulus) - 1 != k or modulus[-1] != 1:
        raise ReducibleModulusError(f"GF({q}) needs a monic modulus of degree {k}")
    if not is_irreducible_mod_p(modulus, p):
        raise ReducibleModulusError(
            f"GF({q}): {_poly_text(modulus)} is reducible over GF({p})"
        )
    return _quotient_tables(p, modulus)


def _atom_tables(atom: Atom) -> _Tables:
    if isinstance(atom, ResidueAtom):
        return _residue_tables(atom.modulus)
    if isinstance(atom, GaloisAtom):
        return _galois_tables(atom.size, atom.modulus)
    return _quotient_tables(atom.modulus, atom.coefficients)


def _product_tables(parts: list[_Tables]) -> _Tables:
    if len(parts) == 1:
        return parts[0]
    add, mul = parts[0].add, parts[0].mul
    for part in parts[1:]:
        n1, n2 = add.shape[0], part.add.shape[0]
        size = n1 * n2
        add = (add[:, None, :, None] * n2 + part.add[None, :, None, :]).reshape(size, size)
        mul = (mul[:, None, :, None] * n2 + part.mul[None, :, None, :]).reshape(size, size)
    labels = tuple(
        "(" + ",".join(combo) + ")" for combo in itertools.product(*(p.labels for p in parts))
    )
    return _Tables(labels=labels, add=add, mul=mul)


def _find_identity(mul: np.ndarray) -> int:
    idx = np.arange(mul.shape[0])
    for e in range(mul.shape[0]):
        if np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx):
            return e
    raise RingAxiomError("multiplication table has no two-sided identity")


# === FiniteRing ===


@dataclass(frozen=True)
class Locality:
    """Locality record: is_local, the maximal ideal J and q = |R/J| when local."""

    is_local: bool
    maximal_ideal: frozenset[int] | None = None
    residue_field_size: int | None = None

    @property
    def jacobson_size(self) -> int | None:
        return None if self.maximal_ideal is None else len(self.maximal_ideal)

    def to_dict(self) -> dict:
        return {
            "is_local": self.is_local,
            "maximal_ideal": sorted(self.maximal_ideal) if self.maximal_ideal is not None else None,
            "J_size": self.jacobson_size,
            "q": self.residue_field_size,
        }


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A fully tabulated finite ring. Immutable; safe to share across threads."""

    spec: RingSpec
    labels: tuple[str, ...]
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int

    @property
    def name(self) -> str:
        return self.spec.text

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def residue_modulus(self) -> int | None:
        """m when the ring is a single Z_m, else None."""
        if len(self.spec.factors) == 1 and isinstance(self.spec.factors[0], ResidueAtom):
            return self.spec.factors[0].modulus
        return None

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, label: str) -> int:
        try:
            return self._label_index[label.replace(" ", "")]
        except KeyError:
            raise KeyError(f"{label!r} is not an element of {self.name}") from None

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def neg(self) -> np.ndarray:
        neg = np.argmax(self.add == self.zero, axis=1)
        neg.setflags(write=False)
        return neg

    @cached_property
    def sub(self) -> np.ndarray:
        """sub[x, y] = x - y."""
        sub = self.add[:, self.neg]
        sub.setflags(write=False)
        return sub

    @cached_property
    def unit_mask(self) -> np.ndarray:
        # two-sided inverse: some y with xy = yx = 1
        mask = ((self.mul == self.one) & (self.mul.T == self.one)).any(axis=1)
        mask.setflags(write=False)
        return mask

    @cached_property
    def units(self) -> frozenset[int]:
        return frozenset(int(x) for x in np.flatnonzero(self.unit_mask))

    @property
    def u(self) -> int:
        return len(self.units)

    @property
    def v(self) -> int:
        """Number of nonzero nonunits."""
        return self.order - 1 - self.u

    def is_unit(self, x: int) -> bool:
        return bool(self.unit_mask[x])

    def principal_left_ideal(self, x: int) -> frozenset[int]:
        """Rx = {r x : r in R}."""
        return frozenset(int(y) for y in np.unique(self.mul[:, x]))

    def ideal_sum(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        sums = self.add[np.ix_(sorted(a), sorted(b))]
        return frozenset(int(y) for y in np.unique(sums))

    @cached_property
    def left_ideals(self) -> tuple[frozenset[int], ...]:
        known = {self.principal_left_ideal(x) for x in self.elements}
        frontier = set(known)
        while frontier:
            found = set()
            for a in frontier:
                for b in known:
                    s = self.ideal_sum(a, b)
                    if s not in known and s not in found:
                        found.add(s)
            known |= found
            frontier = found
        return tuple(sorted(known, key=lambda ideal: (len(ideal), sorted(ideal))))

    @cached_property
    def associate_classes(self) -> tuple[tuple[int, ...], ...]:
        classes: dict[frozenset[int], list[int]] = {}
        for x in self.elements:
            classes.setdefault(self.principal_left_ideal(x), []).append(x)
        return tuple(sorted(tuple(members) for members in classes.values()))

    @cached_property
    def locality(self) -> Locality:
        nonunits = np.flatnonzero(~self.unit_mask)
        sums = self.add[np.ix_(nonunits, nonunits)]
        if self.unit_mask[sums].any():
            return Locality(is_local=False)
        maximal = frozenset(int(x) for x in nonunits)
        return Locality(
            is_local=True,
            maximal_ideal=maximal,
            residue_field_size=self.order // len(maximal),
        )

    @property
    def is_local(self) -> bool:
        return self.locality.is_local

    @property
    def is_field(self) -> bool:
        return self.u == self.order - 1

    def __repr__(self) -> str:
        return f"FiniteRing({self.name!r}, order={self.order})"


# === Construction ===


def check_ring_axioms(
    ring: FiniteRing,
    exhaustive_limit: int | None = None,
    sample_triples: int | None = None,
    seed: int = 0,
) -> None:
    """Check the ring axioms on the tables, raising RingAxiomError on the first failure.

    Exhaustive over all triples up to `exhaustive_limit` elements, otherwise
    on `sample_triples` random triples.
    """
    cfg = get_config().ring
    limit = cfg.exhaustive_axiom_limit if exhaustive_limit is None else exhaustive_limit
    samples = cfg.axiom_sample_triples if sample_triples is None else sample_triples

    n = ring.order
    if n <= limit:
        grid = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
        a, b, c = (g.ravel() for g in grid)
    else:
        a, b, c = np.random.default_rng(seed).integers(0, n, size=(3, samples))

    add, mul, zero, one = ring.add, ring.mul, ring.zero, ring.one
    checks = {
        "additive associativity": lambda: add[add[a, b], c] == add[a, add[b, c]],
        "additive commutativity": lambda: add[a, b] == add[b, a],
        "additive identity": lambda: add[a, zero] == a,
        "additive inverse": lambda: add[a, ring.neg[a]] == zero,
        "multiplicative associativity": lambda: mul[mul[a, b], c] == mul[a, mul[b, c]],
        "multiplicative identity": lambda: (mul[one, a] == a) & (mul[a, one] == a),
        "left distributivity": lambda: mul[a, add[b, c]] == add[mul[a, b], mul[a, c]],
        "right distributivity": lambda: mul[add[a, b], c] == add[mul[a, c], mul[b, c]],
    }
    for name, check in checks.items():
        bad = np.flatnonzero(~check())
        if bad.size:
            i = bad[0]
            raise RingAxiomError(
                f"{name} fails in {ring.name} at ({ring.labels[a[i]]}, "
                f"{ring.labels[b[i]]}, {ring.labels[c[i]]})"
            )


def _ring_from_tables(spec: RingSpec, tables: _Tables) -> FiniteRing:
    add = tables.add.astype(np.int64)
    mul = tables.mul.astype(np.int64)
    add.setflags(write=False)
    mul.setflags(write=False)
    zero_candidates = np.flatnonzero((add == np.arange(add.shape[0])[None, :]).all(axis=1))
    if zero_candidates.size == 0:
        raise RingAxiomError(f"{spec.text}: addition has no identity")
    return FiniteRing(
        spec=spec,
        labels=tables.labels,
        add=add,
        mul=mul,
        zero=int(zero_candidates[0]),
        one=_find_identity(mul),
    )


@lru_cache(maxsize=64)
def _build_checked(spec: RingSpec, check_axioms: bool) -> FiniteRing:
    tables = _product_tables([_atom_tables(atom) for atom in spec.factors])
    ring = _ring_from_tables(spec, tables)
    if check_axioms:
        check_ring_axioms(ring)
    return ring


def build_ring(
    spec: str | RingSpec,
    order_cap: int | None = None,
    check_axioms: bool | None = None,
) -> FiniteRing:
    """Build a FiniteRing from a descriptor such as `Z4`, `GF(8)`, `Z2xZ4` or `Z4[x]/(x^2+x+1)`."""
    cfg = get_config().ring
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    cap = cfg.order_cap if order_cap is None else order_cap
    if spec.order > cap:
        raise OrderCapExceeded(f"{spec.text} has order {spec.order}, above the cap {cap}")
    return _build_checked(spec, cfg.check_axioms if check_axioms is None else check_axioms)


def galois_field(q: int, modulus: tuple[int, ...] | str | None = None) -> FiniteRing:
    """GF(q) with an optional explicit modulus (ascending coefficients or polynomial text)."""
    pk = _prime_power(q)
    if pk is None:
        raise RingSpecError(f"GF({q}): {q} is not a prime power")
    if isinstance(modulus, str):
        modulus = _parse_modulus_polynomial(modulus.replace(" ", ""), pk[0])
    elif modulus is not None:
        modulus = tuple(int(c) % pk[0] for c in modulus)
    tables = _galois_tables(q, modulus)
    ring = _ring_from_tables(RingSpec((GaloisAtom(q, modulus),)), tables)
    check_ring_axioms(ring)
    return ring


# === Structural queries (module-level API) ===


def units(ring: FiniteRing) -> frozenset[int]:
    return ring.units


def principal_left_ideal(ring: FiniteRing, x: int) -> frozenset[int]:
    return ring.principal_left_ideal(x)


def left_ideals(ring: FiniteRing) -> tuple[frozenset[int], ...]:
    """All left ideals: closure of principal left ideals under pairwise sums."""
    return ring.left_ideals


def is_local(ring: FiniteRing) -> Locality:
    return ring.locality


def associate_classes(ring: FiniteRing) -> tuple[tuple[int, ...], ...]:
    """Partition of R by x ~ y iff Rx = Ry."""
    return ring.associate_classes


def ring_summary(ring: FiniteRing) -> dict:
    """Structural summary used by the `ring` CLI command."""
    return {
        "ring": ring.name,
        "order": ring.order,
        "labels": list(ring.labels),
        "units": sorted(ring.units),
        "u": ring.u,
        "v": ring.v,
        "left_ideals": [sorted(ideal) for ideal in ring.left_ideals],
        "associate_classes": [list(c) for c in ring.associate_classes],
        "locality": ring.locality.to_dict(),
    }
