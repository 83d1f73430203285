"""Exact scalars, combinatorial primitives and the composition type.

Every identity in this package is checked over :class:`fractions.Fraction`,
so ``Rational`` below is simply an alias for it. Python integers are unbounded,
which is all the "big integer" machinery the rest of the code needs.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class DomainError(ValueError):
    """A value lies outside the domain where an operation is defined."""


def binomial(n: int, k: int) -> int:
    """C(n, k) with the usual convention C(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial expects nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def rational_pow(q: RationalLike, e: int) -> Fraction:
    # 0**0 == 1 (empty product); Fraction already follows this convention
    q = as_rational(q)
    if e < 0 and q == 0:
        raise DomainError("zero raised to a negative power")
    return q**e


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` (optional sign). Decimals are rejected on purpose."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: RationalLike) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Composition:
    """A finite sequence of positive integers ``(k_1, ..., k_r)``."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(k) for k in self.parts)
        if any(k < 1 for k in parts):
            raise ValueError(f"composition parts must be positive integers: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, value: "Composition | Iterable[int] | str") -> "Composition":
        if isinstance(value, Composition):
            return value
        if isinstance(value, str):
            value = value.strip().strip("()")
            return cls(tuple(int(t) for t in value.split(",") if t.strip()))
        return cls(tuple(value))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def admissible(self) -> bool:
        return bool(self.parts) and self.parts[0] > 1

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Composition(self.parts[idx])
        return self.parts[idx]

    def __add__(self, other: "Composition | tuple[int, ...]") -> "Composition":
        return Composition(self.parts + tuple(Composition.of(other).parts))

    def reversed(self) -> "Composition":
        return Composition(self.parts[::-1])

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def ones_composition(d: int) -> Composition:
    """The composition {1}_d; d = 0 gives the empty composition."""
    if d < 0:
        raise ValueError("repetition count must be nonnegative")
    return Composition((1,) * d)


def partial_weight(k: Composition, j: int) -> int:
    """k_1 + ... + k_j, with the empty partial weight equal to 0."""
    if j < 0 or j > k.depth:
        raise IndexError(f"partial weight index {j} outside 0..{k.depth}")
    return sum(k.parts[:j])


def compositions_up_to(max_weight: int) -> list[Composition]:
    """All nonempty compositions of weight <= max_weight, ordered by weight then lexicographically."""
    out: list[Composition] = []

    def build(prefix: tuple[int, ...], remaining: int):
        if prefix:
            out.append(Composition(prefix))
        for part in range(1, remaining + 1):
            build(prefix + (part,), remaining - part)

    build((), max_weight)
    out.sort(key=lambda c: (c.weight, c.parts))
    return out
