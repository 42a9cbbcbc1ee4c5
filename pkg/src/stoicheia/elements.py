"""The four classical elements as face inventories, with the conservation
rules their transformations must satisfy.

Fire, air and water carry equilateral faces (4, 8 and 20 of them); earth
carries 6 square faces and never converts to or from the others, since a
square face decomposes into isosceles right triangles while an equilateral
face decomposes into half-equilaterals.  A transformation is valid when the
equilateral face budget balances exactly, all non-earth participants share
one size class, and earth appears only as an unchanged spectator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .field import FieldElement, ONE
from .tiling import Kind, cornford_sequence

__all__ = [
    "Element",
    "FIRE",
    "AIR",
    "WATER",
    "EARTH",
    "ELEMENTS",
    "element",
    "Particle",
    "particle",
    "Reaction",
    "Violation",
    "ReactionCheck",
    "face_budget",
    "basic_triangle_budget",
    "validate_reaction",
    "enumerate_decompositions",
    "OrderingCheck",
    "SizeAudit",
    "relative_size_audit",
    "FamilyAudit",
    "cornford_family_audit",
]

QtyLike = Union[int, str, Fraction]
SizeLike = Union[FieldElement, int, str, Fraction]


@dataclass(frozen=True)
class Element:
    name: str
    polyhedron: str
    face_shape: str
    face_count: int


FIRE = Element("fire", "tetrahedron", "equilateral", 4)
AIR = Element("air", "octahedron", "equilateral", 8)
WATER = Element("water", "icosahedron", "equilateral", 20)
EARTH = Element("earth", "cube", "square", 6)

ELEMENTS = {e.name: e for e in (FIRE, AIR, WATER, EARTH)}

TRIANGLES_PER_EQUILATERAL_FACE = 6
TRIANGLES_PER_SQUARE_FACE = 4


def element(name: str) -> Element:
    try:
        return ELEMENTS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown element {name!r}") from None


def _as_size(size: SizeLike) -> FieldElement:
    if isinstance(size, FieldElement):
        return size
    if isinstance(size, str):
        return FieldElement.parse(size)
    return FieldElement(size)


@dataclass(frozen=True)
class Particle:
    """An element at a size class (face-side multiplier of the basic face)."""

    element: Element
    size_class: FieldElement = ONE

    def __post_init__(self) -> None:
        size = _as_size(self.size_class)
        object.__setattr__(self, "size_class", size)
        if size.sign() <= 0:
            raise ValueError("size class must be positive")

    def __str__(self) -> str:
        if self.size_class == ONE:
            return self.element.name
        return f"{self.element.name}@{self.size_class.compact()}"


def particle(name: str, size: SizeLike = 1) -> Particle:
    return Particle(element(name), _as_size(size))


Term = tuple[Particle, Fraction]


def _coerce_terms(raw: Iterable) -> tuple[Term, ...]:
    terms: list[Term] = []
    for particle_, qty in raw:
        if not isinstance(particle_, Particle):
            raise TypeError("reaction terms pair a Particle with a quantity")
        q = Fraction(qty)
        if q <= 0:
            raise ValueError("reaction quantities must be positive")
        terms.append((particle_, q))
    return tuple(terms)


_REACTION_TERM_RE = re.compile(
    r"^\s*(?:(?P<qty>\d+(?:\.\d+)?(?:/\d+)?)\s+)?(?P<element>[a-zA-Z]+)"
    r"(?:@(?P<size>[^\s]+))?\s*$"
)


@dataclass(frozen=True)
class Reaction:
    """A multiset rewrite between particles with positive rational quantities."""

    inputs: tuple[Term, ...]
    outputs: tuple[Term, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "inputs", _coerce_terms(self.inputs))
        object.__setattr__(self, "outputs", _coerce_terms(self.outputs))
        if not self.inputs or not self.outputs:
            raise ValueError("a reaction needs inputs and outputs")

    @classmethod
    def parse(cls, text: str) -> Reaction:
        """Parse shorthand like ``"1 water -> 1 fire + 2 air"``.

        Terms are ``qty element`` (quantity optional, fractions allowed)
        with an optional ``@size`` size class; ``->`` separates sides.
        """
        normalized = text.replace("→", "->")
        sides = normalized.split("->")
        if len(sides) != 2:
            raise ValueError(f"expected one '->' in {text!r}")

        def parse_side(side: str) -> list[Term]:
            terms = []
            for chunk in side.split("+"):
                m = _REACTION_TERM_RE.match(chunk)
                if m is None:
                    raise ValueError(f"cannot parse reaction term {chunk!r}")
                qty = Fraction(m.group("qty")) if m.group("qty") else Fraction(1)
                size = m.group("size") or "1"
                terms.append((particle(m.group("element"), size), qty))
            return terms

        return cls(tuple(parse_side(sides[0])), tuple(parse_side(sides[1])))

    def __str__(self) -> str:
        def side(terms: tuple[Term, ...]) -> str:
            return " + ".join(f"{qty} {p}" for p, qty in terms)

        return f"{side(self.inputs)} -> {side(self.outputs)}"

    def to_json(self) -> dict:
        def side(terms: tuple[Term, ...]) -> list[dict]:
            return [
                {
                    "element": p.element.name,
                    "size_class": str(p.size_class),
                    "qty": str(qty),
                }
                for p, qty in terms
            ]

        return {"inputs": side(self.inputs), "outputs": side(self.outputs)}

    @classmethod
    def from_json(cls, data: dict) -> Reaction:
        def side(items: list) -> list[Term]:
            terms = []
            for item in items:
                size = item.get("size_class", "1")
                if isinstance(size, list):
                    size_value = FieldElement.from_json(size)
                else:
                    size_value = _as_size(size)
                terms.append(
                    (Particle(element(item["element"]), size_value), Fraction(str(item["qty"])))
                )
            return terms

        return cls(tuple(side(data["inputs"])), tuple(side(data["outputs"])))


def face_budget(p: Particle, qty: QtyLike) -> Fraction:
    """Face count contributed by qty particles, in the particle's own ledger
    (equilateral faces for fire/air/water, square faces for earth)."""
    q = Fraction(qty)
    if q <= 0:
        raise ValueError("quantity must be positive")
    return q * p.element.face_count


def basic_triangle_budget(p: Particle, qty: QtyLike) -> Fraction:
    """Basic right triangles behind qty particles: 6 half-equilaterals per
    equilateral face, 4 isosceles per square face."""
    q = Fraction(qty)
    if q <= 0:
        raise ValueError("quantity must be positive")
    if p.element.face_shape == "square":
        return q * p.element.face_count * TRIANGLES_PER_SQUARE_FACE
    return q * p.element.face_count * TRIANGLES_PER_EQUILATERAL_FACE


@dataclass(frozen=True)
class Violation:
    code: str
    message: str


@dataclass(frozen=True)
class ReactionCheck:
    ok: bool
    violations: tuple[Violation, ...]
    equilateral_in: Fraction
    equilateral_out: Fraction
    earth_in: Fraction
    earth_out: Fraction

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"code": v.code, "message": v.message} for v in self.violations
            ],
            "equilateral_faces": {
                "in": str(self.equilateral_in),
                "out": str(self.equilateral_out),
            },
            "earth_faces": {"in": str(self.earth_in), "out": str(self.earth_out)},
        }


def _earth_census(terms: tuple[Term, ...]) -> dict[FieldElement, Fraction]:
    census: dict[FieldElement, Fraction] = {}
    for p, qty in terms:
        if p.element is EARTH:
            census[p.size_class] = census.get(p.size_class, Fraction(0)) + qty
    return census


def validate_reaction(reaction: Reaction) -> ReactionCheck:
    """Check the three conservation clauses of a transformation.

    1. Earth never converts: it may appear only as a spectator, identical
       (per size class) on both sides.
    2. All non-earth participants share a single size class.
    3. Equilateral face budgets balance exactly.
    """
    violations: list[Violation] = []

    earth_in = _earth_census(reaction.inputs)
    earth_out = _earth_census(reaction.outputs)
    faces_in_earth = sum(earth_in.values(), Fraction(0)) * EARTH.face_count
    faces_out_earth = sum(earth_out.values(), Fraction(0)) * EARTH.face_count
    if faces_in_earth != faces_out_earth:
        violations.append(
            Violation(
                "earth-exclusion",
                f"earth never converts: square faces in {faces_in_earth} vs out {faces_out_earth}",
            )
        )
    elif earth_in != earth_out:
        violations.append(
            Violation(
                "earth-size-change",
                "earth is a spectator only; its per-size census must match on both sides",
            )
        )

    sizes = {
        p.size_class
        for terms in (reaction.inputs, reaction.outputs)
        for p, _ in terms
        if p.element is not EARTH
    }
    if len(sizes) > 1:
        listing = ", ".join(sorted(str(s) for s in sizes))
        violations.append(
            Violation(
                "size-class-mixed",
                f"non-earth participants must share one size class, got {{{listing}}}",
            )
        )

    eq_in = sum(
        (qty * p.element.face_count for p, qty in reaction.inputs if p.element is not EARTH),
        Fraction(0),
    )
    eq_out = sum(
        (qty * p.element.face_count for p, qty in reaction.outputs if p.element is not EARTH),
        Fraction(0),
    )
    if eq_in != eq_out:
        violations.append(
            Violation(
                "face-imbalance",
                f"equilateral faces must balance: in {eq_in} vs out {eq_out}",
            )
        )

    return ReactionCheck(
        ok=not violations,
        violations=tuple(violations),
        equilateral_in=eq_in,
        equilateral_out=eq_out,
        earth_in=faces_in_earth,
        earth_out=faces_out_earth,
    )


def enumerate_decompositions(
    face_total: QtyLike,
    integral_only: bool = False,
    denominator_bound: int = 2,
) -> list[tuple[Fraction, Fraction, Fraction]]:
    """All (fire, air, water) quantity triples with 4a + 8b + 20c = face_total.

    Quantities are nonnegative with denominators dividing the bound (1 when
    integral_only); the result is sorted lexicographically and includes the
    identity decompositions.
    """
    total = Fraction(face_total)
    if total <= 0:
        raise ValueError("face total must be positive")
    d = 1 if integral_only else int(denominator_bound)
    if d < 1:
        raise ValueError("denominator bound must be at least 1")
    scaled = total * d
    if scaled.denominator != 1:
        return []
    n = scaled.numerator
    out: list[tuple[Fraction, Fraction, Fraction]] = []
    for i in range(n // 4 + 1):
        r1 = n - 4 * i
        for j in range(r1 // 8 + 1):
            r2 = r1 - 8 * j
            if r2 % 20 == 0:
                out.append((Fraction(i, d), Fraction(j, d), Fraction(r2 // 20, d)))
    out.sort()
    return out


@dataclass(frozen=True)
class OrderingCheck:
    lower: str
    upper: str
    lower_max_area: FieldElement
    upper_min_area: FieldElement
    ok: bool


@dataclass(frozen=True)
class SizeAudit:
    """Relative-size audit: with total face area as the measure, every fire
    variant must stay strictly below every air variant, and air below water.
    Earth is exempt (its square faces are outside the transformation cycle)."""

    ok: bool
    upper_bound: FieldElement
    checks: tuple[OrderingCheck, ...]
    counterexample: Optional[OrderingCheck]
    water_unbounded: bool = False


def relative_size_audit(
    upper_bound: SizeLike, water_unbounded: bool = False
) -> SizeAudit:
    """Audit the bound B on non-earth size classes, strictly.

    Fire tops out at 4*B**2 face area against the basic air at 8, and air
    at 8*B**2 against the basic water at 20; the audit passes only when
    both inequalities are strict.  ``water_unbounded`` records the optional
    relaxation that lets water exceed the bound (off by default); since
    water sits at the top of the ordering, it does not change the checks.
    """
    bound = _as_size(upper_bound)
    if not bound > ONE:
        raise ValueError("size bound must exceed 1")
    b2 = bound * bound
    checks = []
    for low, high in ((FIRE, AIR), (AIR, WATER)):
        low_max = low.face_count * b2
        high_min = FieldElement(high.face_count)
        checks.append(
            OrderingCheck(
                lower=low.name,
                upper=high.name,
                lower_max_area=low_max,
                upper_min_area=high_min,
                ok=(high_min - low_max).sign() > 0,
            )
        )
    bad = next((c for c in checks if not c.ok), None)
    return SizeAudit(
        ok=bad is None,
        upper_bound=bound,
        checks=tuple(checks),
        counterexample=bad,
        water_unbounded=water_unbounded,
    )


@dataclass(frozen=True)
class FamilyAudit:
    """Count of distinct face-area multipliers up to n_max**2: the sqrt2 (or
    sqrt3) doubling series on top of the plain squares multiplies the count
    by strictly less than two, while the sizes themselves grow without bound."""

    kind: Kind
    n_max: int
    area_cap: int
    economical: tuple[int, ...]
    cornford: tuple[int, ...]
    ratio: Fraction
    ratio_below_two: bool
    boundary_case: bool
    unbounded_growth: bool = True


def cornford_family_audit(kind: Kind, n_max: int) -> FamilyAudit:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    cap = n_max * n_max
    economical = tuple(n * n for n in range(1, n_max + 1))
    full = cornford_sequence(kind, n_max)
    boundary = n_max == 1
    if boundary:
        # Too short to cap meaningfully; report the raw 2/1 ratio.
        cornford = tuple(full)
    else:
        cornford = tuple(v for v in full if v <= cap)
    ratio = Fraction(len(cornford), len(economical))
    return FamilyAudit(
        kind=kind,
        n_max=n_max,
        area_cap=cap,
        economical=economical,
        cornford=cornford,
        ratio=ratio,
        ratio_below_two=ratio < 2,
        boundary_case=boundary,
    )
