"""Pydantic models for ringcode documents."""

from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, Field, field_validator


class RationalModel(BaseModel):
    """Exact rational rendered as {num, den}."""

    num: int
    den: int = Field(1, gt=0)

    @classmethod
    def of(cls, value: Fraction | int) -> RationalModel:
        value = Fraction(value)
        return cls(num=value.numerator, den=value.denominator)


class CodeFile(BaseModel):
    """On-disk code: element indices in the ring's canonical order."""

    ring: str = Field(..., description="Ring descriptor, e.g. Z4 or GF(8)")
    n: int = Field(..., ge=1, description="Code length")
    words: list[list[int]] = Field(..., min_length=1, description="Codewords as index lists")

    @field_validator("words")
    @classmethod
    def _words_have_indices(cls, words: list[list[int]]) -> list[list[int]]:
        for word in words:
            if any(x < 0 for x in word):
                raise ValueError("element indices must be nonnegative")
        return words


class SearchSidecar(BaseModel):
    """Certification data written next to a searched code."""

    ring: str
    n: int
    d: str = Field(..., description="Requested minimum distance as p/q")
    weight: str
    method: str = Field(..., description="greedy or branch-and-bound")
    size: int
    certified_optimal: bool
    nodes: int
    ordering: str
    gv_guarantee: RationalModel | None = None
    wall_time: float | None = Field(None, description="Seconds, only with --timing")
