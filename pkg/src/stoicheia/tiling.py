"""Exact dissections and coverings of squares and equilateral triangles.

Every coordinate lives in Q(sqrt2, sqrt3), so orientation, containment and
overlap predicates are decided exactly and area identities hold with zero
tolerance.  Canonical placements keep outputs reproducible: squares are
axis-aligned with a corner at the origin, equilateral triangles sit on the
x-axis with the apex above, and scaled compositions put the right angle of
the target triangle at the origin with the short leg along +x.

Constructions provided:

* economical: square from 2 isosceles right triangles (one diagonal),
  equilateral from 2 half-equilaterals (one altitude);
* timaeus: square from 4 pieces (both diagonals), equilateral from 6
  pieces (three altitudes through the centre);
* cornford: 2 isosceles (or 3 half-equilateral) basic triangles joined
  disjointly into a similar triangle scaled by sqrt2 (or sqrt3);
* revisited: 3 basic triangles, overlaps allowed, covering a similar
  triangle scaled by 3/2 (areas 9/4), plus the 12-piece larger square and
  the 18-piece larger equilateral assembled from those coverings.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

from .field import FieldElement, ONE, R2, R3, ZERO

__all__ = [
    "Kind",
    "Mode",
    "Point",
    "pt",
    "orient",
    "squared_distance",
    "BasicTriangle",
    "PlacedTriangle",
    "classify_triangle",
    "Dissection",
    "ScaledComposition",
    "ValidationReport",
    "BoundedFamilyReport",
    "polygon_area",
    "interiors_disjoint",
    "split_right",
    "economical_square",
    "economical_equilateral",
    "timaeus_square",
    "timaeus_equilateral",
    "validate",
    "symmetry_order",
    "cornford_scale",
    "cornford_sequence",
    "revisited_scale",
    "revisited_square",
    "revisited_equilateral",
    "bounded_family",
]

Coord = Union[FieldElement, int, Fraction]


class Kind(str, Enum):
    ISOSCELES_RIGHT = "isosceles-right"
    HALF_EQUILATERAL = "half-equilateral"


class Mode(str, Enum):
    DISJOINT = "disjoint"
    COVERING = "covering"


@dataclass(frozen=True)
class Point:
    x: FieldElement
    y: FieldElement


def pt(x: Coord, y: Coord) -> Point:
    fx = x if isinstance(x, FieldElement) else FieldElement(x)
    fy = y if isinstance(y, FieldElement) else FieldElement(y)
    return Point(fx, fy)


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b - a) x (c - a): +1 left turn, 0 collinear."""
    return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign()


def squared_distance(a: Point, b: Point) -> FieldElement:
    dx = b.x - a.x
    dy = b.y - a.y
    return dx * dx + dy * dy


def _side_squares(verts: Sequence[Point]) -> tuple[FieldElement, FieldElement, FieldElement]:
    a, b, c = verts
    return (squared_distance(b, c), squared_distance(c, a), squared_distance(a, b))


def _expected_side_squares(kind: Kind, scale: FieldElement) -> tuple[FieldElement, ...]:
    s2 = scale * scale
    if kind is Kind.ISOSCELES_RIGHT:
        return (s2, s2, 2 * s2)
    return (s2, 3 * s2, 4 * s2)


@dataclass(frozen=True)
class BasicTriangle:
    """One of the two foundational right triangles at a positive scale.

    The isosceles right triangle has legs (scale, scale); the
    half-equilateral has sides (scale, scale*sqrt3, 2*scale).
    """

    kind: Kind
    scale: FieldElement

    def __post_init__(self) -> None:
        scale = self.scale if isinstance(self.scale, FieldElement) else FieldElement(self.scale)
        object.__setattr__(self, "scale", scale)
        if scale.sign() <= 0:
            raise ValueError("triangle scale must be positive")

    def area(self) -> FieldElement:
        s2 = self.scale * self.scale
        if self.kind is Kind.ISOSCELES_RIGHT:
            return s2 / 2
        return s2 * R3 / 2


@dataclass(frozen=True)
class PlacedTriangle:
    """Three vertices, optionally certified congruent to a basic kind."""

    vertices: tuple[Point, Point, Point]
    kind: Optional[Kind] = None
    scale: Optional[FieldElement] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) != 3:
            raise ValueError("a triangle has three vertices")
        if orient(*self.vertices) == 0:
            raise ValueError("degenerate triangle")
        if self.kind is not None:
            scale = self.scale
            if scale is None:
                raise ValueError("a classified triangle needs its scale")
            if not isinstance(scale, FieldElement):
                scale = FieldElement(scale)
                object.__setattr__(self, "scale", scale)
            if scale.sign() <= 0:
                raise ValueError("triangle scale must be positive")
            got = tuple(sorted(_side_squares(self.vertices)))
            if got != _expected_side_squares(self.kind, scale):
                raise ValueError(
                    f"vertices do not realise a {self.kind.value} triangle at scale {scale}"
                )

    def area(self) -> FieldElement:
        a, b, c = self.vertices
        twice = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
        return abs(twice) / 2


def classify_triangle(verts: Sequence[Point]) -> Optional[tuple[Kind, FieldElement]]:
    """Recognise a basic triangle from its vertices, when the scale is in-field."""
    a2, b2, c2 = sorted(_side_squares(verts))
    if a2 == b2 and c2 == 2 * a2:
        scale = a2.sqrt()
        if scale is not None:
            return Kind.ISOSCELES_RIGHT, scale
    if b2 == 3 * a2 and c2 == 4 * a2:
        scale = a2.sqrt()
        if scale is not None:
            return Kind.HALF_EQUILATERAL, scale
    return None


def _placed(verts: Sequence[Point]) -> PlacedTriangle:
    hit = classify_triangle(verts)
    if hit is None:
        return PlacedTriangle(tuple(verts))
    return PlacedTriangle(tuple(verts), hit[0], hit[1])


@dataclass(frozen=True)
class Dissection:
    """Placed triangles over a convex target polygon.

    Disjoint mode: pairwise interior-disjoint pieces whose areas sum to
    the target area exactly.  Covering mode: pieces may overlap but stay
    inside the target and their union must cover it.
    """

    target: tuple[Point, ...]
    pieces: tuple[PlacedTriangle, ...]
    mode: Mode
    target_name: str

    def target_area(self) -> FieldElement:
        return polygon_area(self.target)

    def pieces_area(self) -> FieldElement:
        total = ZERO
        for piece in self.pieces:
            total = total + piece.area()
        return total


@dataclass(frozen=True)
class ScaledComposition:
    """Basic triangles assembled into a similar figure at a fixed ratio."""

    dissection: Dissection
    kind: Kind
    side_ratio: FieldElement
    area_ratio: FieldElement
    basic_count: int


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    mode: Mode
    violations: tuple[str, ...]
    samples_checked: int = 0


def _signed_area2(points: Sequence[Point]) -> FieldElement:
    total = ZERO
    n = len(points)
    for i in range(n):
        a = points[i]
        b = points[(i + 1) % n]
        total = total + (a.x * b.y - b.x * a.y)
    return total


def polygon_area(points: Sequence[Point]) -> FieldElement:
    return abs(_signed_area2(points)) / 2


def _ccw(verts: Sequence[Point]) -> tuple[Point, ...]:
    verts = tuple(verts)
    if _signed_area2(verts).sign() < 0:
        return tuple(reversed(verts))
    return verts


def _contains(poly_ccw: Sequence[Point], p: Point) -> bool:
    """Closed containment in a convex CCW polygon."""
    n = len(poly_ccw)
    for i in range(n):
        if orient(poly_ccw[i], poly_ccw[(i + 1) % n], p) < 0:
            return False
    return True


def _edge_separates(tri_ccw: Sequence[Point], other: Sequence[Point]) -> bool:
    a, b, c = tri_ccw
    for p, q in ((a, b), (b, c), (c, a)):
        if all(orient(p, q, v) <= 0 for v in other):
            return True
    return False


def interiors_disjoint(t1: Sequence[Point], t2: Sequence[Point]) -> bool:
    """Exact separating-axis test for two triangles (shared edges allowed)."""
    u, v = _ccw(t1), _ccw(t2)
    return _edge_separates(u, v) or _edge_separates(v, u)


def _affine(a: Point, b: Point, c: Point, s: Fraction, t: Fraction) -> Point:
    return Point(
        a.x + (b.x - a.x) * s + (c.x - a.x) * t,
        a.y + (b.y - a.y) * s + (c.y - a.y) * t,
    )


def _midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def _grid_samples(target: Sequence[Point], density: Fraction) -> list[Point]:
    """Deterministic sample set: rational grid plus vertices and edge midpoints."""
    n = max(1, int(Fraction(1) / Fraction(density)))
    pts: set[Point] = set()
    if len(target) == 3:
        a, b, c = target
        for i in range(n + 1):
            for j in range(n + 1 - i):
                pts.add(_affine(a, b, c, Fraction(i, n), Fraction(j, n)))
    elif len(target) == 4:
        v0, v1, _, v3 = target
        for i in range(n + 1):
            for j in range(n + 1):
                pts.add(_affine(v0, v1, v3, Fraction(i, n), Fraction(j, n)))
    else:
        raise ValueError("sampling supports triangle and square targets")
    m = len(target)
    for k in range(m):
        pts.add(target[k])
        pts.add(_midpoint(target[k], target[(k + 1) % m]))
    return list(pts)


def validate(d: Dissection, grid_density: Fraction = Fraction(1, 64)) -> ValidationReport:
    """Check a dissection against its mode's contract, exactly.

    Disjoint mode runs pairwise separating-axis tests and the exact area
    sum.  Covering mode probes a rational grid of the given density plus
    all vertices and edge midpoints; every probe must land in some piece.
    """
    violations: list[str] = []
    target = _ccw(d.target)
    norm_pieces = [_ccw(p.vertices) for p in d.pieces]
    for idx, verts in enumerate(norm_pieces):
        for v in verts:
            if not _contains(target, v):
                violations.append(f"piece {idx} vertex ({v.x}, {v.y}) lies outside the target")
    samples = 0
    if d.mode is Mode.DISJOINT:
        for i in range(len(norm_pieces)):
            for j in range(i + 1, len(norm_pieces)):
                if not interiors_disjoint(norm_pieces[i], norm_pieces[j]):
                    violations.append(f"pieces {i} and {j} have overlapping interiors")
        total = d.pieces_area()
        expected = d.target_area()
        if total != expected:
            violations.append(f"piece areas sum to {total}, target area is {expected}")
    else:
        probes = _grid_samples(d.target, grid_density)
        samples = len(probes)
        missed = 0
        for p in probes:
            if not any(_contains(tri, p) for tri in norm_pieces):
                missed += 1
                if missed <= 12:
                    violations.append(f"uncovered target point ({p.x}, {p.y})")
        if missed > 12:
            violations.append(f"{missed} uncovered points in total")
    return ValidationReport(
        ok=not violations, mode=d.mode, violations=tuple(violations), samples_checked=samples
    )


# -- dihedral symmetry ------------------------------------------------------


def _isometry(center: Point, m: tuple) -> Callable[[Point], Point]:
    def apply(p: Point) -> Point:
        ux = p.x - center.x
        uy = p.y - center.y
        return Point(center.x + m[0] * ux + m[1] * uy, center.y + m[2] * ux + m[3] * uy)

    return apply


def _vertex_centroid(verts: Sequence[Point]) -> Point:
    n = len(verts)
    sx = ZERO
    sy = ZERO
    for v in verts:
        sx = sx + v.x
        sy = sy + v.y
    return Point(sx / n, sy / n)


def _dihedral_symmetries(poly: Sequence[Point]) -> list[Callable[[Point], Point]]:
    """All isometries of the plane mapping the polygon's vertex cycle to itself.

    Candidates are solved from the correspondence V0 -> Vk (rotation, or
    reflection reversing the cycle) and kept only when every vertex maps
    correctly, so irregular polygons simply yield fewer symmetries.
    """
    verts = _ccw(poly)
    n = len(verts)
    center = _vertex_centroid(verts)
    rel = [(v.x - center.x, v.y - center.y) for v in verts]
    x0, y0 = rel[0]
    r2 = x0 * x0 + y0 * y0
    symmetries: list[Callable[[Point], Point]] = []
    for k in range(n):
        xt, yt = rel[k]
        for reflect in (False, True):
            if reflect:
                p = (x0 * xt - y0 * yt) / r2
                q = (y0 * xt + x0 * yt) / r2
                m = (p, q, q, -p)
            else:
                a = (x0 * xt + y0 * yt) / r2
                b = (x0 * yt - y0 * xt) / r2
                m = (a, -b, b, a)
            f = _isometry(center, m)
            index = (lambda i: (k - i) % n) if reflect else (lambda i: (k + i) % n)
            if all(f(verts[i]) == verts[index(i)] for i in range(n)):
                symmetries.append(f)
    return symmetries


def _edge_set(pieces: Sequence[PlacedTriangle]) -> set[frozenset[Point]]:
    edges: set[frozenset[Point]] = set()
    for piece in pieces:
        a, b, c = piece.vertices
        for p, q in ((a, b), (b, c), (c, a)):
            edges.add(frozenset((p, q)))
    return edges


def symmetry_order(d: Dissection) -> int:
    """Order of the subgroup of the target's dihedral group fixing the
    piece-edge set (edges as unordered vertex pairs)."""
    if d.target_name not in ("square", "equilateral"):
        raise ValueError("symmetry order is defined for square or equilateral targets")
    edges = _edge_set(d.pieces)
    count = 0
    for f in _dihedral_symmetries(d.target):
        image = {frozenset(f(p) for p in edge) for edge in edges}
        if image == edges:
            count += 1
    return count


# -- altitude split of an arbitrary triangle ---------------------------------


def split_right(a: Point, b: Point, c: Point) -> tuple[PlacedTriangle, PlacedTriangle]:
    """Split any triangle into two right triangles along one altitude.

    The altitude is dropped from a vertex of largest angle (ties broken by
    lowest vertex index), which guarantees its foot falls strictly inside
    the opposite side.  Degenerate input raises ValueError.
    """
    verts = (a, b, c)
    if orient(a, b, c) == 0:
        raise ValueError("degenerate (collinear) triangle")
    opposite = (
        squared_distance(b, c),
        squared_distance(c, a),
        squared_distance(a, b),
    )
    apex_index = 0
    for i in (1, 2):
        if opposite[i] > opposite[apex_index]:
            apex_index = i
    apex = verts[apex_index]
    p = verts[(apex_index + 1) % 3]
    q = verts[(apex_index + 2) % 3]
    t = ((apex.x - p.x) * (q.x - p.x) + (apex.y - p.y) * (q.y - p.y)) / squared_distance(p, q)
    if not (ZERO < t < ONE):
        raise ValueError("altitude foot is not interior; input is not a triangle")
    foot = Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))
    return _placed((apex, p, foot)), _placed((apex, foot, q))


# -- canonical constructions --------------------------------------------------


def _positive(value: Coord, name: str) -> FieldElement:
    s = value if isinstance(value, FieldElement) else FieldElement(value)
    if s.sign() <= 0:
        raise ValueError(f"{name} must be positive")
    return s


def economical_square(side: Coord = 1) -> Dissection:
    """Square cut along one diagonal into 2 isosceles right triangles."""
    s = _positive(side, "side")
    o, bx, tz, ty = pt(0, 0), pt(s, 0), pt(s, s), pt(0, s)
    pieces = (
        PlacedTriangle((o, bx, tz), Kind.ISOSCELES_RIGHT, s),
        PlacedTriangle((o, tz, ty), Kind.ISOSCELES_RIGHT, s),
    )
    return Dissection((o, bx, tz, ty), pieces, Mode.DISJOINT, "square")


def timaeus_square(side: Coord = 1) -> Dissection:
    """Square cut along both diagonals into 4 isosceles right triangles."""
    s = _positive(side, "side")
    corners = (pt(0, 0), pt(s, 0), pt(s, s), pt(0, s))
    center = pt(s / 2, s / 2)
    leg = s * R2 / 2
    pieces = tuple(
        PlacedTriangle(
            (corners[i], corners[(i + 1) % 4], center), Kind.ISOSCELES_RIGHT, leg
        )
        for i in range(4)
    )
    return Dissection(corners, pieces, Mode.DISJOINT, "square")


def economical_equilateral(side: Coord = 1) -> Dissection:
    """Equilateral triangle cut along one altitude into 2 half-equilaterals."""
    s = _positive(side, "side")
    height = s * R3 / 2
    a, b = pt(0, 0), pt(s, 0)
    apex = pt(s / 2, height)
    foot = pt(s / 2, 0)
    scale = s / 2
    pieces = (
        PlacedTriangle((a, foot, apex), Kind.HALF_EQUILATERAL, scale),
        PlacedTriangle((foot, b, apex), Kind.HALF_EQUILATERAL, scale),
    )
    return Dissection((a, b, apex), pieces, Mode.DISJOINT, "equilateral")


def timaeus_equilateral(side: Coord = 1) -> Dissection:
    """Equilateral triangle cut by its three altitudes into 6 half-equilaterals
    meeting at the centroid."""
    s = _positive(side, "side")
    a, b = pt(0, 0), pt(s, 0)
    apex = pt(s / 2, s * R3 / 2)
    centroid = pt(s / 2, s * R3 / 6)
    corners = (a, b, apex)
    scale = s * R3 / 6
    pieces = []
    for i in range(3):
        p = corners[i]
        q = corners[(i + 1) % 3]
        mid = _midpoint(p, q)
        pieces.append(PlacedTriangle((p, mid, centroid), Kind.HALF_EQUILATERAL, scale))
        pieces.append(PlacedTriangle((mid, q, centroid), Kind.HALF_EQUILATERAL, scale))
    return Dissection(corners, tuple(pieces), Mode.DISJOINT, "equilateral")


def cornford_scale(kind: Kind, copies: int) -> ScaledComposition:
    """Join identical basic triangles disjointly into a similar triangle.

    Supported: 2 isosceles right triangles (sides scaled by sqrt2, area
    by 2) and 3 half-equilaterals (sides scaled by sqrt3, area by 3).
    """
    if kind is Kind.ISOSCELES_RIGHT and copies == 2:
        mid = R2 / 2
        target = (pt(0, 0), pt(R2, 0), pt(0, R2))
        pieces = (
            PlacedTriangle((pt(0, 0), pt(R2, 0), pt(mid, mid)), kind, ONE),
            PlacedTriangle((pt(0, 0), pt(mid, mid), pt(0, R2)), kind, ONE),
        )
        dissection = Dissection(target, pieces, Mode.DISJOINT, "triangle")
        return ScaledComposition(dissection, kind, R2, FieldElement(2), 2)
    if kind is Kind.HALF_EQUILATERAL and copies == 3:
        half_r3 = R3 / 2
        target = (pt(0, 0), pt(R3, 0), pt(0, 3))
        pieces = (
            PlacedTriangle((pt(0, 0), pt(R3, 0), pt(0, 1)), kind, ONE),
            PlacedTriangle((pt(0, 1), pt(R3, 0), pt(half_r3, Fraction(3, 2))), kind, ONE),
            PlacedTriangle((pt(0, 1), pt(half_r3, Fraction(3, 2)), pt(0, 3)), kind, ONE),
        )
        dissection = Dissection(target, pieces, Mode.DISJOINT, "triangle")
        return ScaledComposition(dissection, kind, R3, FieldElement(3), 3)
    raise ValueError(f"unsupported composition: {copies} copies of {kind.value}")


def cornford_sequence(kind: Kind, n_max: int) -> list[int]:
    """Area multipliers {n**2, k*n**2} for n <= n_max, k = 2 (squares built
    from isosceles) or 3 (equilaterals from half-equilaterals), deduplicated."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    k = 2 if kind is Kind.ISOSCELES_RIGHT else 3
    values = {n * n for n in range(1, n_max + 1)}
    values |= {k * n * n for n in range(1, n_max + 1)}
    return sorted(values)


THREE_HALVES = Fraction(3, 2)


def _revisited_iso_pieces() -> tuple[tuple[Point, Point, Point], ...]:
    # Three unit isosceles right triangles covering the triangle with legs
    # 3/2 at the origin: one at the right angle, one at each acute corner.
    h = Fraction(1, 2)
    return (
        (pt(0, 0), pt(1, 0), pt(0, 1)),
        (pt(h, 0), pt(THREE_HALVES, 0), pt(h, 1)),
        (pt(0, h), pt(1, h), pt(0, THREE_HALVES)),
    )


def _revisited_he_pieces() -> tuple[tuple[Point, Point, Point], ...]:
    # Three unit half-equilaterals covering the half-equilateral with short
    # leg 3/2 along +x and long leg (3/2)*sqrt3 along +y.
    h = Fraction(1, 2)
    long_leg = R3 * THREE_HALVES
    half_r3 = R3 / 2
    return (
        (pt(0, 0), pt(1, 0), pt(0, R3)),
        (pt(h, 0), pt(THREE_HALVES, 0), pt(h, R3)),
        (pt(0, half_r3), pt(1, half_r3), pt(0, long_leg)),
    )


def revisited_scale(kind: Kind) -> ScaledComposition:
    """Cover a 3/2-scaled basic triangle with three overlapping unit copies.

    The target area is 9/4 of a basic triangle while the placed area is 3,
    so overlap is unavoidable; the covering is validated by exact probes.
    """
    if kind is Kind.ISOSCELES_RIGHT:
        target = (pt(0, 0), pt(THREE_HALVES, 0), pt(0, THREE_HALVES))
        raw = _revisited_iso_pieces()
    else:
        target = (pt(0, 0), pt(THREE_HALVES, 0), pt(0, R3 * THREE_HALVES))
        raw = _revisited_he_pieces()
    pieces = tuple(PlacedTriangle(v, kind, ONE) for v in raw)
    dissection = Dissection(target, pieces, Mode.COVERING, "triangle")
    return ScaledComposition(
        dissection, kind, FieldElement(THREE_HALVES), FieldElement(Fraction(9, 4)), 3
    )


def _map_frame(origin: Point, ux: Point, uy: Point, local: Point) -> Point:
    return Point(
        origin.x + local.x * ux.x + local.y * uy.x,
        origin.y + local.x * ux.y + local.y * uy.y,
    )


def revisited_square() -> ScaledComposition:
    """The larger square: 12 unit isosceles right triangles, three per
    diagonal quarter, covering the square of side (3/2)*sqrt2."""
    w = R2 * THREE_HALVES
    corners = (pt(0, 0), pt(w, 0), pt(w, w), pt(0, w))
    center = pt(w / 2, w / 2)
    third = Fraction(2, 3)
    raw = _revisited_iso_pieces()
    pieces = []
    for k in range(4):
        a = corners[k]
        b = corners[(k + 1) % 4]
        ux = Point((a.x - center.x) * third, (a.y - center.y) * third)
        uy = Point((b.x - center.x) * third, (b.y - center.y) * third)
        for verts in raw:
            mapped = tuple(_map_frame(center, ux, uy, v) for v in verts)
            pieces.append(PlacedTriangle(mapped, Kind.ISOSCELES_RIGHT, ONE))
    dissection = Dissection(corners, tuple(pieces), Mode.COVERING, "square")
    return ScaledComposition(
        dissection,
        Kind.ISOSCELES_RIGHT,
        FieldElement(THREE_HALVES),
        FieldElement(Fraction(9, 4)),
        12,
    )


def revisited_equilateral() -> ScaledComposition:
    """The larger equilateral: six 3/2-scaled half-equilateral cells, each
    covered by three unit copies, 18 pieces over the side-3*sqrt3 triangle."""
    side = 3 * R3
    a, b = pt(0, 0), pt(side, 0)
    apex = pt(side / 2, side * R3 / 2)
    corners = (a, b, apex)
    centroid = pt(side / 2, side * R3 / 6)
    raw = _revisited_he_pieces()
    short_unit = Fraction(2, 3)
    long_unit = R3 * Fraction(2, 9)
    pieces = []
    for i in range(3):
        p = corners[i]
        q = corners[(i + 1) % 3]
        mid = _midpoint(p, q)
        for corner in (p, q):
            ux = Point((centroid.x - mid.x) * short_unit, (centroid.y - mid.y) * short_unit)
            uy = Point((corner.x - mid.x) * long_unit, (corner.y - mid.y) * long_unit)
            for verts in raw:
                mapped = tuple(_map_frame(mid, ux, uy, v) for v in verts)
                pieces.append(PlacedTriangle(mapped, Kind.HALF_EQUILATERAL, ONE))
    dissection = Dissection(corners, tuple(pieces), Mode.COVERING, "equilateral")
    return ScaledComposition(
        dissection,
        Kind.HALF_EQUILATERAL,
        FieldElement(THREE_HALVES),
        FieldElement(Fraction(9, 4)),
        18,
    )


@dataclass(frozen=True)
class BoundedFamilyReport:
    """Size-class audit for one basic kind under an upper bound below sqrt2."""

    kind: Kind
    upper_bound: FieldElement
    bound_area: FieldElement
    accepted: tuple[tuple[FieldElement, FieldElement], ...]
    rejected: tuple[FieldElement, ...]
    ok: bool


def bounded_family(
    kind: Kind,
    upper_bound: Coord,
    scales: Iterable[Coord],
) -> BoundedFamilyReport:
    """Check scales against the family contract 1 <= s <= B with B < sqrt2.

    Every accepted scale has area multiplier s**2 <= B**2 < 2; scales
    outside [1, B] are rejected exactly, with zero tolerance.  A bound at
    or above sqrt2 is refused outright.
    """
    bound = _positive(upper_bound, "upper bound")
    if not bound > ONE:
        raise ValueError("upper bound must exceed 1")
    bound_area = bound * bound
    if not (2 - bound_area).sign() > 0:
        raise ValueError("relative-size ordering would break: bound must stay below sqrt2")
    accepted: list[tuple[FieldElement, FieldElement]] = []
    rejected: list[FieldElement] = []
    for raw in scales:
        s = raw if isinstance(raw, FieldElement) else FieldElement(raw)
        if ONE <= s <= bound:
            accepted.append((s, s * s))
        else:
            rejected.append(s)
    assert all(area <= bound_area for _, area in accepted)
    return BoundedFamilyReport(
        kind=kind,
        upper_bound=bound,
        bound_area=bound_area,
        accepted=tuple(accepted),
        rejected=tuple(rejected),
        ok=not rejected,
    )
