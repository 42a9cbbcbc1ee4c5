"""Geometric-mean and two-mean proportion theory.

A single mean c between a and b satisfies a/c = c/b, equivalently
a*b = c**2; two means c, d between a and b satisfy c**2 = a*d and
d**2 = c*b, which forces c**3 = a**2*b.  Checks on exact field values are
zero-tolerance; chains containing enclosures are checked against a
caller-supplied rational tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .enclosure import (
    DEFAULT_WIDTH,
    Enclosure,
    cube_root_enclosure,
    enclose_value,
    sqrt_enclosure,
)
from .field import FieldElement, R2, ZERO, rational_cube_root

__all__ = [
    "DEFAULT_TOLERANCE",
    "MeanChain",
    "MeanTriangle",
    "CubeDuplication",
    "check_single_mean",
    "construct_mean",
    "mean_triangle",
    "invert_chain",
    "chain_valid",
    "check_two_means",
    "two_mean_chain",
    "duplicate_cube",
    "square_duplication_mean",
]

DEFAULT_TOLERANCE = Fraction(1, 10**6)

Value = Union[FieldElement, Enclosure]


def _positive_field(x: Union[FieldElement, int, Fraction], name: str) -> FieldElement:
    el = x if isinstance(x, FieldElement) else FieldElement(x)
    if el.sign() <= 0:
        raise ValueError(f"{name} must be strictly positive, got {el}")
    return el


def _is_positive(term: Value) -> bool:
    if isinstance(term, Enclosure):
        return term.lo > 0
    return term.sign() > 0


@dataclass(frozen=True)
class MeanChain:
    """An ordered proportion chain a:c:b or a:c:d:b of positive terms."""

    terms: tuple[Value, ...]

    def __post_init__(self) -> None:
        terms = tuple(
            t if isinstance(t, (FieldElement, Enclosure)) else FieldElement(t)
            for t in self.terms
        )
        object.__setattr__(self, "terms", terms)
        if len(terms) not in (3, 4):
            raise ValueError("a mean chain has 3 or 4 terms")
        for t in terms:
            if not _is_positive(t):
                raise ValueError("chain terms must be certified positive")

    @property
    def exact(self) -> bool:
        return all(isinstance(t, FieldElement) for t in self.terms)


def check_single_mean(
    a: Union[FieldElement, int, Fraction],
    c: Union[FieldElement, int, Fraction],
    b: Union[FieldElement, int, Fraction],
) -> bool:
    """True iff c is the geometric mean of a and b, exactly (a*b == c**2)."""
    fa = _positive_field(a, "a")
    fc = _positive_field(c, "c")
    fb = _positive_field(b, "b")
    return fa * fb == fc * fc


def construct_mean(
    a: Union[FieldElement, int, Fraction],
    b: Union[FieldElement, int, Fraction],
    width: Union[int, Fraction] = DEFAULT_WIDTH,
) -> Value:
    """The geometric mean of a and b.

    Returns an exact FieldElement when sqrt(a*b) lies in the field,
    otherwise an Enclosure of the requested width (the out-of-field case).
    """
    fa = _positive_field(a, "a")
    fb = _positive_field(b, "b")
    product = fa * fb
    exact = product.sqrt()
    if exact is not None:
        return exact
    return sqrt_enclosure(product, width)


@dataclass(frozen=True)
class MeanTriangle:
    """Right triangle realising a geometric mean as an altitude.

    O = (0, 0) and B = (a + b, 0) span the hypotenuse; the apex
    D = (a, h) has height h = sqrt(a*b).  When h is exact the right angle
    at D is verified by a zero dot product.
    """

    origin: tuple[FieldElement, FieldElement]
    base_end: tuple[FieldElement, FieldElement]
    apex_x: FieldElement
    height: Value
    right_angle_exact: bool

    @property
    def apex(self) -> tuple[FieldElement, FieldElement]:
        if not isinstance(self.height, FieldElement):
            raise ValueError("apex is exact only when the mean lies in the field")
        return (self.apex_x, self.height)


def mean_triangle(
    a: Union[FieldElement, int, Fraction],
    b: Union[FieldElement, int, Fraction],
    width: Union[int, Fraction] = DEFAULT_WIDTH,
) -> MeanTriangle:
    fa = _positive_field(a, "a")
    fb = _positive_field(b, "b")
    height = construct_mean(fa, fb, width)
    right = False
    if isinstance(height, FieldElement):
        # (D - O) . (D - B) = a*(a - (a+b)) + h*h = h*h - a*b
        right = (height * height - fa * fb).sign() == 0
    return MeanTriangle(
        origin=(ZERO, ZERO),
        base_end=(fa + fb, ZERO),
        apex_x=fa,
        height=height,
        right_angle_exact=right,
    )


def invert_chain(chain: MeanChain) -> MeanChain:
    """The chain read backwards; validity is preserved either way."""
    return MeanChain(tuple(reversed(chain.terms)))


def _residual_within(residual: Enclosure, tolerance: Fraction) -> bool:
    return -tolerance <= residual.lo and residual.hi <= tolerance


def check_two_means(
    a: Value,
    c: Value,
    d: Value,
    b: Value,
    tolerance: Union[int, Fraction] = DEFAULT_TOLERANCE,
    width: Union[int, Fraction] = DEFAULT_WIDTH,
) -> bool:
    """True iff c**2 = a*d and d**2 = c*b.

    Chains of exact field values are checked exactly; if any term is an
    enclosure, all terms are promoted to enclosures (exact terms at the
    given width) and both residuals must be certified within ``tolerance``.
    """
    terms = (a, c, d, b)
    for t in terms:
        if not _is_positive(t if isinstance(t, (FieldElement, Enclosure)) else FieldElement(t)):
            raise ValueError("all chain terms must be positive")
    if all(isinstance(t, (FieldElement, int, Fraction)) for t in terms):
        fa, fc, fd, fb = (t if isinstance(t, FieldElement) else FieldElement(t) for t in terms)
        return fc * fc == fa * fd and fd * fd == fc * fb
    enclosed = tuple(
        t if isinstance(t, Enclosure) else enclose_value(t, width) for t in terms
    )
    ea, ec, ed, eb = enclosed
    tol = Fraction(tolerance)
    return _residual_within(ec * ec - ea * ed, tol) and _residual_within(
        ed * ed - ec * eb, tol
    )


def chain_valid(
    chain: MeanChain, tolerance: Union[int, Fraction] = DEFAULT_TOLERANCE
) -> bool:
    """Validity of a 3- or 4-term chain (exact, or to tolerance for enclosures)."""
    terms = chain.terms
    if len(terms) == 3:
        a, c, b = terms
        if chain.exact:
            return check_single_mean(a, c, b)
        ea, ec, eb = (
            t if isinstance(t, Enclosure) else enclose_value(t) for t in terms
        )
        return _residual_within(ec * ec - ea * eb, Fraction(tolerance))
    a, c, d, b = terms
    return check_two_means(a, c, d, b, tolerance)


def two_mean_chain(
    a: Union[FieldElement, int, Fraction],
    b: Union[FieldElement, int, Fraction],
    width: Union[int, Fraction] = DEFAULT_WIDTH,
) -> MeanChain:
    """The chain (a, c, d, b) with c**3 = a**2*b and d**3 = a*b**2.

    Means come out exact when a and b are rational with rational cube
    roots of a**2*b and a*b**2; otherwise they are certified enclosures.
    """
    fa = _positive_field(a, "a")
    fb = _positive_field(b, "b")
    c_target = fa * fa * fb
    d_target = fa * fb * fb
    c: Value
    d: Value
    if fa.is_rational and fb.is_rational:
        rc = rational_cube_root(c_target.as_fraction())
        rd = rational_cube_root(d_target.as_fraction())
        if rc is not None and rd is not None:
            return MeanChain((fa, FieldElement(rc), FieldElement(rd), fb))
    c = cube_root_enclosure(c_target, width)
    d = cube_root_enclosure(d_target, width)
    return MeanChain((fa, c, d, fb))


@dataclass(frozen=True)
class CubeDuplication:
    """Certified side of a cube with twice the volume of the cube on ``a``.

    ``side`` encloses a * 2**(1/3); ``cube`` encloses side**3, which the
    residual bound ties to the exact target 2*a**3.  No claim is made that
    the side lies in Q(sqrt2, sqrt3): membership of cube roots in the
    square-radical tower is not decided here.
    """

    side: Enclosure
    cube: Enclosure
    residual_bound: Fraction


def duplicate_cube(
    a: Union[FieldElement, int, Fraction],
    width: Union[int, Fraction] = DEFAULT_WIDTH,
) -> CubeDuplication:
    base = _positive_field(a, "a")
    target = 2 * base * base * base
    side = cube_root_enclosure(target, width)
    cube = side.cube()
    tlo, thi = target.bounds(Fraction(width))
    residual = max(thi - cube.lo, cube.hi - tlo, Fraction(0))
    return CubeDuplication(side=side, cube=cube, residual_bound=residual)


def square_duplication_mean(
    a: Union[FieldElement, int, Fraction],
) -> FieldElement:
    """The single mean a*sqrt2 between a and 2a: doubling a square is planar."""
    base = _positive_field(a, "a")
    return base * R2
