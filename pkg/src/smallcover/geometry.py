"""Exact rational 2D primitives: points, rings, regions with holes.

All coordinates are fractions.Fraction; every predicate is decided by exact
arithmetic, never by tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
Point = tuple[Fraction, Fraction]
Ring = tuple[Point, ...]


class GeometryError(ValueError):
    pass


class InvalidRegionError(GeometryError):
    pass


def rat(value, den=None) -> Fraction:
    """Build an exact rational from int, Fraction, 'p/q', or decimal string."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)  # handles 'p/q' and exact decimal strings
    if isinstance(value, float):
        raise GeometryError("refusing float %r; pass a string or fraction" % value)
    raise GeometryError("cannot interpret %r as a rational" % (value,))


def pt(x, y) -> Point:
    return (rat(x), rat(y))


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Signed area*2 of triangle (o,a,b); >0 means b is left of o->a."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orient(o: Point, a: Point, b: Point) -> int:
    c = cross(o, a, b)
    return (c > 0) - (c < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def ring_area2(ring: Sequence[Point]) -> Fraction:
    """Twice the signed area (positive for counterclockwise)."""
    total = Fraction(0)
    n = len(ring)
    for i in range(n):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return total


def ring_edges(ring: Sequence[Point]) -> list[tuple[Point, Point]]:
    n = len(ring)
    return [(ring[i], ring[(i + 1) % n]) for i in range(n)]


def simplify_ring(ring: Sequence[Point]) -> Ring:
    """Drop vertices collinear with their neighbours; keeps geometry identical."""
    out = []
    n = len(ring)
    for i, v in enumerate(ring):
        if orient(ring[(i - 1) % n], v, ring[(i + 1) % n]) != 0:
            out.append(v)
    if len(out) < 3:
        return tuple(ring)
    # canonical start: leftmost-lowest vertex first
    k = out.index(min(out))
    return tuple(out[k:] + out[:k])


def _segments_cross_or_touch(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff closed segments ab and cd share at least one point."""
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
       ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0 and on_segment(a, c, d):
        return True
    if d2 == 0 and on_segment(b, c, d):
        return True
    if d3 == 0 and on_segment(c, a, b):
        return True
    if d4 == 0 and on_segment(d, a, b):
        return True
    return False


def _ring_is_simple(ring: Sequence[Point]) -> bool:
    n = len(ring)
    if n < 3:
        return False
    if len(set(ring)) != n:
        return False
    edges = ring_edges(ring)
    for i in range(n):
        a, b = edges[i]
        if a == b:
            return False
        for j in range(i + 1, n):
            c, d = edges[j]
            adjacent = j == (i + 1) % n or i == (j + 1) % n
            if adjacent:
                # consecutive edges may only share the common endpoint
                shared = b if j == (i + 1) % n else a
                other1 = a if shared is b else b
                if orient(c, d, other1) == 0 and orient(a, b, c if shared is b else d) == 0:
                    # collinear neighbours would overlap or spike
                    if on_segment(a if j == (i + 1) % n else d,
                                  c if j == (i + 1) % n else a,
                                  d if j == (i + 1) % n else b):
                        return False
                continue
            if _segments_cross_or_touch(a, b, c, d):
                return False
    return True


def point_in_ring(q: Point, ring: Sequence[Point]) -> int:
    """1 inside, 0 on boundary, -1 outside (even-odd rule, exact)."""
    for a, b in ring_edges(ring):
        if on_segment(q, a, b):
            return 0
    inside = False
    x, y = q
    for a, b in ring_edges(ring):
        (x1, y1), (x2, y2) = a, b
        if (y1 > y) != (y2 > y):
            # x coordinate of edge at height y, exact
            xs = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xs > x:
                inside = not inside
    return 1 if inside else -1


def winding_number(q: Point, ring: Sequence[Point]) -> int:
    """Exact winding number of ring around q (q not on boundary)."""
    wn = 0
    x, y = q
    for a, b in ring_edges(ring):
        if a[1] <= y:
            if b[1] > y and orient(a, b, q) > 0:
                wn += 1
        else:
            if b[1] <= y and orient(a, b, q) < 0:
                wn -= 1
    return wn


@dataclass(frozen=True)
class Region:
    """Polygon with holes: ccw outer ring, cw hole rings, exact coordinates."""

    outer: Ring
    holes: tuple[Ring, ...] = field(default_factory=tuple)

    def area(self) -> Fraction:
        total = ring_area2(self.outer)
        for h in self.holes:
            total += ring_area2(h)  # holes are cw, negative
        return total / 2

    def all_rings(self) -> list[Ring]:
        return [self.outer, *self.holes]

    def vertex_count(self) -> int:
        return sum(len(r) for r in self.all_rings())

    def bbox(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [p[0] for p in self.outer]
        ys = [p[1] for p in self.outer]
        return min(xs), min(ys), max(xs), max(ys)

    def translate(self, dx, dy) -> "Region":
        dx, dy = rat(dx), rat(dy)
        move = lambda r: tuple((x + dx, y + dy) for x, y in r)
        return Region(move(self.outer), tuple(move(h) for h in self.holes))

    def rotate90(self) -> "Region":
        """Rotate by 90 degrees counterclockwise about the origin."""
        rot = lambda r: tuple((-y, x) for x, y in r)
        return Region(rot(self.outer), tuple(rot(h) for h in self.holes))


def region(outer: Iterable, holes: Iterable = ()) -> Region:
    out = tuple(pt(x, y) for x, y in outer)
    hs = tuple(tuple(pt(x, y) for x, y in h) for h in holes)
    return Region(out, hs)


def box(x1, y1, x2, y2) -> Region:
    x1, y1, x2, y2 = rat(x1), rat(y1), rat(x2), rat(y2)
    return Region(((x1, y1), (x2, y1), (x2, y2), (x1, y2)))


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.problems


def validate_region(r: Region) -> ValidationReport:
    """Check ring simplicity, orientation, hole containment and disjointness."""
    problems: list[str] = []
    rings = r.all_rings()
    for idx, ring in enumerate(rings):
        name = "outer ring" if idx == 0 else "hole %d" % (idx - 1)
        if len(ring) < 3:
            problems.append("%s: fewer than 3 vertices" % name)
            continue
        if not _ring_is_simple(ring):
            problems.append("%s: not simple" % name)
            continue
        a2 = ring_area2(ring)
        if a2 == 0:
            problems.append("%s: zero area" % name)
        elif idx == 0 and a2 < 0:
            problems.append("outer ring orientation: must be counterclockwise")
        elif idx > 0 and a2 > 0:
            problems.append("%s orientation: must be clockwise" % name)
    if problems:
        return ValidationReport(tuple(problems))

    for hi, hole in enumerate(r.holes):
        for v in hole:
            if point_in_ring(v, r.outer) != 1:
                problems.append("hole %d not strictly interior to outer (vertex %s)" % (hi, v))
                break
        else:
            # vertices strictly inside; edges must not touch the outer ring
            for a, b in ring_edges(hole):
                if any(_segments_cross_or_touch(a, b, c, d) for c, d in ring_edges(r.outer)):
                    problems.append("hole %d touches outer boundary" % hi)
                    break
    for i in range(len(r.holes)):
        for j in range(i + 1, len(r.holes)):
            hi, hj = r.holes[i], r.holes[j]
            touching = any(
                _segments_cross_or_touch(a, b, c, d)
                for a, b in ring_edges(hi) for c, d in ring_edges(hj))
            if touching or any(point_in_ring(v, hj) == 1 for v in hi) \
                    or any(point_in_ring(v, hi) == 1 for v in hj):
                problems.append("holes %d and %d are not disjoint" % (i, j))
    return ValidationReport(tuple(problems))


def point_in(r: Region, q: Point) -> str:
    """Classify q against region r: 'inside' | 'boundary' | 'outside'."""
    side = point_in_ring(q, r.outer)
    if side == 0:
        return "boundary"
    if side < 0:
        return "outside"
    for h in r.holes:
        side = point_in_ring(q, h)
        if side == 0:
            return "boundary"
        if side > 0:
            return "outside"
    return "inside"


def point_in_by_winding(r: Region, q: Point) -> str:
    """Independent classification via winding numbers (test oracle)."""
    for ring in r.all_rings():
        for a, b in ring_edges(ring):
            if on_segment(q, a, b):
                return "boundary"
    wn = winding_number(q, r.outer)
    if wn == 0:
        return "outside"
    for h in r.holes:
        if winding_number(q, h) != 0:
            return "outside"
    return "inside"


def linf_diameter(r: Region) -> Fraction:
    x1, y1, x2, y2 = r.bbox()
    return max(x2 - x1, y2 - y1)
