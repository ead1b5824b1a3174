"""Exact half-integers stored as twice their value."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    twice: int

    @classmethod
    def of(cls, x) -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        f = Fraction(x)
        if (2 * f).denominator != 1:
            raise ValueError(f"{x} is not a half-integer")
        return cls(int(2 * f))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __int__(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else HalfInt(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else HalfInt(self.twice - other.twice)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else HalfInt(other.twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __mul__(self, k):
        if isinstance(k, int):
            return HalfInt(self.twice * k)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce(other)
        return other is not None and self.twice == other.twice

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.twice < other.twice

    def __hash__(self):
        return hash(self.as_fraction())

    def __str__(self):
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self})"


HALF = HalfInt(1)


def _coerce(x):
    if isinstance(x, HalfInt):
        return x
    if isinstance(x, int):
        return HalfInt(2 * x)
    if isinstance(x, Fraction) and (2 * x).denominator == 1:
        return HalfInt(int(2 * x))
    return None


def parity_select(a, b, k: int):
    """``a`` when ``k`` is even, ``b`` otherwise."""
    return a if k % 2 == 0 else b
