"""Utility helper functions for ringcode."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import TypeVar

import numpy as np

T = TypeVar("T")
R = TypeVar("R")


def format_rational(value: Fraction | int) -> str:
    """Render a rational losslessly: `p/q`, or just `p` when q == 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse `p/q`, an integer or a finite decimal into an exact Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {text!r}") from e


def rational_dict(value: Fraction | None) -> dict[str, int] | None:
    """JSON shape of an exact rational."""
    if value is None:
        return None
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    """Least common denominator of a collection of fractions."""
    return math.lcm(1, *(Fraction(v).denominator for v in values))


def spawn_generators(seed: int, count: int) -> list[np.random.Generator]:
    """Independent generators for `count` trials from a single master seed.

    Trial k always gets the same stream regardless of how trials are
    distributed across workers.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


def ordered_map(
    fn: Callable[[T], R],
    items: Sequence[T],
    workers: int = 1,
) -> list[R]:
    """Map `fn` over `items`, in parallel when workers > 1, keeping input order."""
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))


def chunk_ranges(total: int, chunk_size: int) -> list[tuple[int, int]]:
    """Split range(total) into consecutive [start, stop) chunks."""
    chunk_size = max(1, chunk_size)
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]
