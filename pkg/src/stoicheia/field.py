"""Exact arithmetic in the real biquadratic field Q(sqrt2, sqrt3).

Every value is stored as four reduced rational coordinates over the basis
(1, sqrt2, sqrt3, sqrt6), so equality is coordinate equality, arithmetic is
closed and exact, and the sign of any element is decidable.  Instances are
immutable and hashable; all operations are pure.
"""

from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Optional, Union

__all__ = [
    "FieldElement",
    "ZERO",
    "ONE",
    "R2",
    "R3",
    "R6",
    "sqrt_in_field",
    "rational_cube_root",
]

RationalLike = Union[int, str, Fraction]


@lru_cache(maxsize=None)
def _radical_bounds(radicand: int, bits: int) -> tuple[Fraction, Fraction]:
    """Rational bounds of sqrt(radicand) with width 1 / 2**bits."""
    scale = 1 << bits
    root = isqrt(radicand * scale * scale)
    return Fraction(root, scale), Fraction(root + 1, scale)


def _sqrt_fraction(q: Fraction) -> Optional[Fraction]:
    """Exact rational square root, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _sqrt_in_qr2(a: Fraction, b: Fraction) -> Optional[tuple[Fraction, Fraction]]:
    """A pair (r, s) with (r + s*sqrt2)**2 == a + b*sqrt2, or None.

    Either sign of the root may be returned; callers normalise.
    """
    if b == 0:
        r = _sqrt_fraction(a)
        if r is not None:
            return r, Fraction(0)
        s = _sqrt_fraction(a / 2)
        if s is not None:
            return Fraction(0), s
        return None
    # r**2 solves t**2 - a*t + b**2/2 = 0; if a root exists in Q(sqrt2),
    # the discriminant a**2 - 2*b**2 equals (r**2 - 2*s**2)**2, a rational square.
    d = _sqrt_fraction(a * a - 2 * b * b)
    if d is None:
        return None
    for t in ((a + d) / 2, (a - d) / 2):
        r = _sqrt_fraction(t)
        if r:
            s = b / (2 * r)
            if r * r + 2 * s * s == a:
                return r, s
    return None


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coef>\d+(?:\.\d+)?(?:/\d+)?)(?:\s*\*\s*(?P<rad>r[236]))?"
    r"|(?P<radonly>r[236]))"
)


class FieldElement:
    """q0 + q1*sqrt2 + q2*sqrt3 + q3*sqrt6 with exact rational coordinates."""

    __slots__ = ("_c",)

    def __init__(
        self,
        q0: RationalLike = 0,
        q1: RationalLike = 0,
        q2: RationalLike = 0,
        q3: RationalLike = 0,
    ) -> None:
        self._c = (Fraction(q0), Fraction(q1), Fraction(q2), Fraction(q3))

    @classmethod
    def _make(cls, coords: tuple[Fraction, Fraction, Fraction, Fraction]) -> FieldElement:
        el = object.__new__(cls)
        el._c = coords
        return el

    # -- coordinates -------------------------------------------------------

    @property
    def coordinates(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._c

    @property
    def is_zero(self) -> bool:
        return not any(self._c)

    @property
    def is_rational(self) -> bool:
        c = self._c
        return not (c[1] or c[2] or c[3])

    def as_fraction(self) -> Fraction:
        """The value as a plain rational; raises when irrational."""
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self._c[0]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: object) -> FieldElement:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        return FieldElement._make((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __sub__(self, other: object) -> FieldElement:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        return FieldElement._make((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other: object) -> FieldElement:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> FieldElement:
        a = self._c
        return FieldElement._make((-a[0], -a[1], -a[2], -a[3]))

    def __mul__(self, other: object) -> FieldElement:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, a2, a3 = self._c
        b0, b1, b2, b3 = o._c
        if not (a1 or a2 or a3):
            return FieldElement._make((a0 * b0, a0 * b1, a0 * b2, a0 * b3))
        if not (b1 or b2 or b3):
            return FieldElement._make((a0 * b0, a1 * b0, a2 * b0, a3 * b0))
        # basis products: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2
        return FieldElement._make(
            (
                a0 * b0 + 2 * a1 * b1 + 3 * a2 * b2 + 6 * a3 * b3,
                a0 * b1 + a1 * b0 + 3 * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1),
                a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            )
        )

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        """Exact multiplicative inverse; raises ZeroDivisionError at zero."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt3)")
        a0, a1, b0, b1 = self._c
        # self = A + B*sqrt3 with A = a0 + a1*sqrt2, B = b0 + b1*sqrt2;
        # self * (A - B*sqrt3) = A**2 - 3*B**2, an element of Q(sqrt2),
        # which is inverted by its own conjugate over Q.
        c0 = a0 * a0 + 2 * a1 * a1 - 3 * (b0 * b0 + 2 * b1 * b1)
        c1 = 2 * a0 * a1 - 6 * b0 * b1
        norm = c0 * c0 - 2 * c1 * c1
        conj = FieldElement._make((a0, a1, -b0, -b1))
        return conj * FieldElement._make((c0 / norm, -c1 / norm, Fraction(0), Fraction(0)))

    def __truediv__(self, other: object) -> FieldElement:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero in Q(sqrt2, sqrt3)")
        if o.is_rational:
            q = o._c[0]
            a = self._c
            return FieldElement._make((a[0] / q, a[1] / q, a[2] / q, a[3] / q))
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> FieldElement:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int) -> FieldElement:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __abs__(self) -> FieldElement:
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- sign and order ----------------------------------------------------

    def sign(self) -> int:
        """Exact sign: -1, 0 or +1.

        Zero is decided from the coordinates (the basis is linearly
        independent over Q); nonzero values are separated from zero by
        rational interval evaluation at increasing precision.
        """
        if not any(self._c):
            return 0
        bits = 16
        while True:
            lo, hi = self.interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits <<= 1

    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational bounds on the value using sqrt bounds of width 2**-bits."""
        q0, q1, q2, q3 = self._c
        lo = hi = q0
        for coef, radicand in ((q1, 2), (q2, 3), (q3, 6)):
            if not coef:
                continue
            rlo, rhi = _radical_bounds(radicand, bits)
            if coef > 0:
                lo += coef * rlo
                hi += coef * rhi
            else:
                lo += coef * rhi
                hi += coef * rlo
        return lo, hi

    def bounds(self, width: Union[Fraction, int]) -> tuple[Fraction, Fraction]:
        """Rational bounds whose gap is at most ``width``."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        bits = 32
        while True:
            lo, hi = self.interval(bits)
            if hi - lo <= width:
                return lo, hi
            bits <<= 1

    def _cmp_sign(self, other: object) -> Optional[int]:
        o = _coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other: object) -> bool:
        s = self._cmp_sign(other)
        if s is None:
            return NotImplemented
        return s < 0

    def __le__(self, other: object) -> bool:
        s = self._cmp_sign(other)
        if s is None:
            return NotImplemented
        return s <= 0

    def __gt__(self, other: object) -> bool:
        s = self._cmp_sign(other)
        if s is None:
            return NotImplemented
        return s > 0

    def __ge__(self, other: object) -> bool:
        s = self._cmp_sign(other)
        if s is None:
            return NotImplemented
        return s >= 0

    def __eq__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        # Rational values hash like their Fraction so mixed-key mappings work.
        if self.is_rational:
            return hash(self._c[0])
        return hash(self._c)

    # -- roots -------------------------------------------------------------

    def sqrt(self) -> Optional[FieldElement]:
        """Exact nonnegative square root inside the field, or None.

        Writes the value as A + B*sqrt3 over Q(sqrt2) and descends the
        tower: a root u + v*sqrt3 forces u**2 to solve a quadratic over
        Q(sqrt2) whose discriminant must itself be a square there.
        Raises ValueError on negative input.
        """
        sgn = self.sign()
        if sgn < 0:
            raise ValueError("square root of a negative value")
        if sgn == 0:
            return ZERO
        a0, a1, b0, b1 = self._c
        root: Optional[FieldElement] = None
        if not b0 and not b1:
            rs = _sqrt_in_qr2(a0, a1)
            if rs is not None:
                root = FieldElement._make((rs[0], rs[1], Fraction(0), Fraction(0)))
            else:
                rs = _sqrt_in_qr2(a0 / 3, a1 / 3)
                if rs is not None:
                    root = FieldElement._make((Fraction(0), Fraction(0), rs[0], rs[1]))
        else:
            # u**2 + 3*v**2 = A and 2*u*v = B, so u**2 solves
            # t**2 - A*t + 3*B**2/4 = 0 with discriminant A**2 - 3*B**2.
            da = a0 * a0 + 2 * a1 * a1 - 3 * (b0 * b0 + 2 * b1 * b1)
            db = 2 * a0 * a1 - 6 * b0 * b1
            dd = _sqrt_in_qr2(da, db)
            if dd is not None:
                for flip in (1, -1):
                    t = ((a0 + flip * dd[0]) / 2, (a1 + flip * dd[1]) / 2)
                    u = _sqrt_in_qr2(*t)
                    if u is None or (not u[0] and not u[1]):
                        continue
                    den = 4 * (u[0] * u[0] - 2 * u[1] * u[1])
                    v0 = (2 * b0 * u[0] - 4 * b1 * u[1]) / den
                    v1 = (2 * b1 * u[0] - 2 * b0 * u[1]) / den
                    cand = FieldElement._make((u[0], u[1], v0, v1))
                    if cand * cand == self:
                        root = cand
                        break
        if root is None:
            return None
        return root if root.sign() >= 0 else -root

    # -- text and interchange forms ------------------------------------------

    def __str__(self) -> str:
        q0, q1, q2, q3 = self._c
        parts = [str(q0)]
        for coef, tag in ((q1, "r2"), (q2, "r3"), (q3, "r6")):
            op = "-" if coef < 0 else "+"
            parts.append(f"{op} {abs(coef)}*{tag}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FieldElement({', '.join(str(q) for q in self._c)})"

    def compact(self) -> str:
        """Space-free text form with zero terms dropped, e.g. ``"3/2-1*r2"``.

        Round-trips through :meth:`parse`; handy where the canonical form's
        spaces would collide with a surrounding grammar.
        """
        parts: list[str] = []
        for coef, tag in zip(self._c, (None, "r2", "r3", "r6")):
            if not coef:
                continue
            body = str(abs(coef)) if tag is None else f"{abs(coef)}*{tag}"
            if not parts:
                parts.append(body if coef > 0 else "-" + body)
            else:
                parts.append(("+" if coef > 0 else "-") + body)
        return "".join(parts) or "0"

    @classmethod
    def parse(cls, text: str) -> FieldElement:
        """Parse the canonical text form, e.g. ``"3/2 + 1*r2 - 2*r6"``.

        Bare rationals ("5", "3/2", "0.25") and bare radicals ("r2") are
        accepted as single terms.
        """
        s = text.strip()
        coords = {1: Fraction(0), 2: Fraction(0), 3: Fraction(0), 6: Fraction(0)}
        pos = 0
        first = True
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if m is None:
                raise ValueError(f"cannot parse field value {text!r}")
            if not first and m.group("sign") is None:
                raise ValueError(f"missing sign between terms in {text!r}")
            factor = -1 if m.group("sign") == "-" else 1
            if m.group("radonly"):
                key = int(m.group("radonly")[1])
                coef = Fraction(1)
            else:
                coef = Fraction(m.group("coef"))
                key = int(m.group("rad")[1]) if m.group("rad") else 1
            coords[key] += factor * coef
            pos = m.end()
            first = False
        if first:
            raise ValueError("empty field value")
        return cls(coords[1], coords[2], coords[3], coords[6])

    def to_json(self) -> list[str]:
        """JSON interchange form: four rational strings."""
        return [str(q) for q in self._c]

    @classmethod
    def from_json(cls, data: list) -> FieldElement:
        if len(data) != 4:
            raise ValueError("field value JSON form needs exactly four rationals")
        return cls(*(Fraction(str(part)) for part in data))

    def approx(self, digits: int = 12) -> str:
        """Decimal approximation to ``digits`` significant digits.

        Non-authoritative: the exact value is the coordinate form.
        """
        lo, hi = self.interval(256)
        mid = (lo + hi) / 2
        with localcontext() as ctx:
            ctx.prec = digits
            value = Decimal(mid.numerator) / Decimal(mid.denominator)
        return str(value)

    def __float__(self) -> float:
        lo, hi = self.interval(80)
        return float((lo + hi) / 2)


def _coerce(value: object) -> Optional[FieldElement]:
    if isinstance(value, FieldElement):
        return value
    if isinstance(value, (int, Fraction)):
        return FieldElement(value)
    return None


def sqrt_in_field(x: Union[FieldElement, int, Fraction]) -> Optional[FieldElement]:
    """Exact nonnegative square root of x within the field, None when absent."""
    el = _coerce(x)
    if el is None:
        raise TypeError(f"not a field value: {x!r}")
    return el.sqrt()


def _icbrt(n: int) -> int:
    """Integer floor cube root for nonnegative n."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            return x
        x = y


def rational_cube_root(q: Union[int, Fraction, str]) -> Optional[Fraction]:
    """Exact rational cube root of a positive rational, or None."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("cube root is defined here for positive rationals")
    num, den = q.numerator, q.denominator
    rn, rd = _icbrt(num), _icbrt(den)
    if rn**3 == num and rd**3 == den:
        return Fraction(rn, rd)
    return None


ZERO = FieldElement(0)
ONE = FieldElement(1)
R2 = FieldElement(0, 1, 0, 0)
R3 = FieldElement(0, 0, 1, 0)
R6 = FieldElement(0, 0, 0, 1)
