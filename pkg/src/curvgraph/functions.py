"""Injective vertex functions with exact values."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable

from .graph import GraphInputError

__all__ = ["DegenerateLevelError", "VertexFunction", "parse_value", "values_from_mapping"]


class DegenerateLevelError(ValueError):
    """A function value coincides with the level it is compared against."""


def parse_value(v) -> Fraction | int:
    """Exact value from an int, a "p/q" or decimal string, or a float."""
    if isinstance(v, bool):
        raise GraphInputError(f"not a number: {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        # decimal repr, so 0.1 means 1/10 rather than its binary expansion
        return Fraction(repr(v))
    if isinstance(v, (str, Fraction)):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise GraphInputError(f"not a number: {v!r}") from None
    raise GraphInputError(f"not a number: {v!r}")


def values_from_mapping(n: int, mapping: dict) -> list:
    """Per-vertex values from an ``{id: value}`` map; every vertex must appear."""
    vals = [None] * n
    for key, value in mapping.items():
        try:
            v = int(key)
        except (TypeError, ValueError):
            raise GraphInputError(f"bad vertex key {key!r}") from None
        if not 0 <= v < n:
            raise GraphInputError(f"vertex {v} out of range for n={n}")
        vals[v] = parse_value(value)
    missing = [v for v, val in enumerate(vals) if val is None]
    if missing:
        raise GraphInputError(f"function has no value for vertices {missing}")
    return vals


class VertexFunction:
    """An injective function on ``0 .. n-1`` with exact (int or Fraction) values.

    Only the induced ordering matters for indices; :meth:`random` draws a
    uniform random permutation of ranks.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable):
        vals = tuple(parse_value(v) for v in values)
        if len(set(vals)) != len(vals):
            raise DegenerateLevelError("vertex function is not injective")
        self.values: tuple = vals

    @classmethod
    def random(cls, n: int, rng: random.Random | int | None = None) -> "VertexFunction":
        if not isinstance(rng, random.Random):
            rng = random.Random(rng)
        ranks = list(range(n))
        rng.shuffle(ranks)
        return cls(ranks)

    @classmethod
    def from_mapping(cls, n: int, mapping: dict) -> "VertexFunction":
        """From a JSON-style ``{id: value}`` map covering every vertex."""
        return cls(values_from_mapping(n, mapping))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int):
        return self.values[v]

    def __neg__(self) -> "VertexFunction":
        return VertexFunction(-v for v in self.values)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VertexFunction) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"VertexFunction({list(self.values)!r})"

    def ranking(self) -> tuple[int, ...]:
        """Rank of each vertex, 0 for the smallest value."""
        order = sorted(range(len(self.values)), key=self.values.__getitem__)
        ranks = [0] * len(order)
        for r, v in enumerate(order):
            ranks[v] = r
        return tuple(ranks)

    def to_mapping(self) -> dict[str, str]:
        return {str(v): str(val) for v, val in enumerate(self.values)}

    def check_size(self, n: int) -> None:
        if len(self.values) != n:
            raise GraphInputError(f"function has {len(self.values)} values, graph has {n} vertices")

