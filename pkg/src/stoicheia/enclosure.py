"""Certified rational enclosures of real roots, refinable by bisection.

An enclosure is a closed rational interval guaranteed to contain one real
value.  Enclosures built by the root constructors carry a sign oracle of
their defining function and can be narrowed to any requested width;
intervals produced by interval arithmetic cannot (refine the operands
instead).  Refinement never widens.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from .field import FieldElement

__all__ = [
    "DEFAULT_WIDTH",
    "Enclosure",
    "refine",
    "sqrt_enclosure",
    "cube_root_enclosure",
    "enclose_value",
]

DEFAULT_WIDTH = Fraction(1, 10**9)

Rationalish = Union[int, Fraction]
SignOracle = Callable[[Fraction], int]


@dataclass(frozen=True)
class Enclosure:
    """Interval [lo, hi] with rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction
    fn: Optional[SignOracle] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: Rationalish) -> Enclosure:
        v = Fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value: Rationalish) -> bool:
        return self.lo <= Fraction(value) <= self.hi

    def is_subinterval_of(self, other: Enclosure) -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    # -- interval arithmetic (results carry no oracle) ----------------------

    def __add__(self, other: object) -> Enclosure:
        o = _as_enclosure(other)
        if o is None:
            return NotImplemented
        return Enclosure(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other: object) -> Enclosure:
        o = _as_enclosure(other)
        if o is None:
            return NotImplemented
        return Enclosure(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other: object) -> Enclosure:
        o = _as_enclosure(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> Enclosure:
        return Enclosure(-self.hi, -self.lo)

    def __mul__(self, other: object) -> Enclosure:
        o = _as_enclosure(other)
        if o is None:
            return NotImplemented
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Enclosure(min(products), max(products))

    __rmul__ = __mul__

    def cube(self) -> Enclosure:
        return self * self * self

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _as_enclosure(value: object) -> Optional[Enclosure]:
    if isinstance(value, Enclosure):
        return value
    if isinstance(value, (int, Fraction)):
        return Enclosure.point(value)
    return None


def refine(enclosure: Enclosure, target_width: Rationalish) -> Enclosure:
    """Narrow an enclosure to width <= target_width by bisection."""
    target = Fraction(target_width)
    if target < 0:
        raise ValueError("target width must be nonnegative")
    if enclosure.width <= target:
        return enclosure
    fn = enclosure.fn
    if fn is None:
        raise ValueError("enclosure carries no sign oracle; refine its source instead")
    lo, hi = enclosure.lo, enclosure.hi
    while hi - lo > target:
        mid = (lo + hi) / 2
        s = fn(mid)
        if s == 0:
            return Enclosure(mid, mid, fn)
        if s < 0:
            lo = mid
        else:
            hi = mid
    return Enclosure(lo, hi, fn)


def _as_field(x: Union[FieldElement, int, Fraction]) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    return FieldElement(x)


def _bracket_upward(fn: SignOracle) -> Fraction:
    hi = Fraction(1)
    while fn(hi) < 0:
        hi *= 2
    return hi


def sqrt_enclosure(
    x: Union[FieldElement, int, Fraction], width: Rationalish = DEFAULT_WIDTH
) -> Enclosure:
    """Enclosure of sqrt(x) for x >= 0, refined to the requested width."""
    value = _as_field(x)
    if value.sign() < 0:
        raise ValueError("square root of a negative value")

    def fn(y: Fraction) -> int:
        return (FieldElement(y * y) - value).sign()

    return refine(Enclosure(Fraction(0), _bracket_upward(fn), fn), width)


def cube_root_enclosure(
    x: Union[FieldElement, int, Fraction], width: Rationalish = DEFAULT_WIDTH
) -> Enclosure:
    """Enclosure of the real cube root of x > 0."""
    value = _as_field(x)
    if value.sign() <= 0:
        raise ValueError("cube root enclosure is defined here for positive values")

    def fn(y: Fraction) -> int:
        return (FieldElement(y**3) - value).sign()

    return refine(Enclosure(Fraction(0), _bracket_upward(fn), fn), width)


def enclose_value(
    x: Union[FieldElement, int, Fraction], width: Rationalish = DEFAULT_WIDTH
) -> Enclosure:
    """Enclosure of an exact field value, refinable to any width."""
    value = _as_field(x)
    lo, hi = value.bounds(Fraction(width))

    def fn(y: Fraction) -> int:
        return (FieldElement(y) - value).sign()

    return Enclosure(lo, hi, fn)
