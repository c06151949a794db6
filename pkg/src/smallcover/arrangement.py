"""Exact planar arrangements: overlay of regions, boolean ops, square clipping.

The pipeline is the classical one: split all input edges at pairwise
intersections into interior-disjoint edgelets, build the rotation system,
trace faces with the interior-on-the-left rule, then attach hole contours to
their parent faces by exact leftward ray shooting.  Everything is decided in
rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import (
    GeometryError,
    Point,
    Region,
    on_segment,
    orient,
    point_in,
    ring_area2,
    ring_edges,
    simplify_ring,
)

Dedge = tuple[Point, Point]


def _seg_intersection_points(a: Point, b: Point, c: Point, d: Point) -> list[Point]:
    """All points needed to split ab against cd (endpoints on, or one crossing)."""
    pts = []
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if d1 == 0 and d2 == 0:
        # collinear: overlap endpoints
        for p in (c, d):
            if on_segment(p, a, b):
                pts.append(p)
        return pts
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
       ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        # proper crossing: solve for the point
        r = (b[0] - a[0], b[1] - a[1])
        s = (d[0] - c[0], d[1] - c[1])
        denom = r[0] * s[1] - r[1] * s[0]
        t = ((c[0] - a[0]) * s[1] - (c[1] - a[1]) * s[0]) / denom
        pts.append((a[0] + t * r[0], a[1] + t * r[1]))
        return pts
    # touching cases: any endpoint lying on the other segment
    if d3 == 0 and on_segment(c, a, b):
        pts.append(c)
    if d4 == 0 and on_segment(d, a, b):
        pts.append(d)
    return pts


def split_segments(segments: list[tuple[Point, Point]]) -> list[Dedge]:
    """Cut segments at all mutual intersections; return deduped edgelets."""
    cuts: list[set[Point]] = [set((a, b)) for a, b in segments]
    for i in range(len(segments)):
        a, b = segments[i]
        for j in range(i + 1, len(segments)):
            c, d = segments[j]
            # cheap bbox reject
            if min(a[0], b[0]) > max(c[0], d[0]) or min(c[0], d[0]) > max(a[0], b[0]) \
               or min(a[1], b[1]) > max(c[1], d[1]) or min(c[1], d[1]) > max(a[1], b[1]):
                continue
            for p in _seg_intersection_points(a, b, c, d):
                cuts[i].add(p)
            for p in _seg_intersection_points(c, d, a, b):
                cuts[j].add(p)
    edgelets: set[Dedge] = set()
    for (a, b), cutset in zip(segments, cuts):
        if a == b:
            continue
        if b[0] != a[0]:
            key = (lambda p: p[0]) if b[0] > a[0] else (lambda p: -p[0])
        else:
            key = (lambda p: p[1]) if b[1] > a[1] else (lambda p: -p[1])
        chain = sorted(cutset, key=key)
        for u, v in zip(chain, chain[1:]):
            if u != v:
                edgelets.add((u, v) if u < v else (v, u))
    return sorted(edgelets)


def _ccw_key(base: Point, d: Point):
    """Sort key: ccw angle of direction d measured from direction base.

    Angle 0 (same direction) sorts last, so the key is usable both for plain
    ccw ordering (base = +x) and for 'first strictly clockwise from base'
    searches via max().
    """
    z = base[0] * d[1] - base[1] * d[0]
    s = base[0] * d[0] + base[1] * d[1]
    if z > 0:
        return (0, -(s / z))       # (0, pi): angle grows as cotangent falls
    if z == 0:
        if s < 0:
            return (1, Fraction(0))  # exactly opposite
        return (3, Fraction(0))      # same direction: angle 2pi
    return (2, -(s / z))           # (pi, 2pi): cotangent falls as angle grows


class PlanarSubdivision:
    """Rotation system over interior-disjoint edgelets; traces oriented faces."""

    def __init__(self, edgelets: list[Dedge]):
        self.edgelets = edgelets
        nbrs: dict[Point, set[Point]] = {}
        for u, v in edgelets:
            nbrs.setdefault(u, set()).add(v)
            nbrs.setdefault(v, set()).add(u)
        plus_x = (Fraction(1), Fraction(0))
        self.rotation: dict[Point, list[Point]] = {}
        for v, ns in nbrs.items():
            self.rotation[v] = sorted(
                ns, key=lambda w: _ccw_key(plus_x, (w[0] - v[0], w[1] - v[1])))
        self.vertices = sorted(nbrs)

    def _next_dedge(self, u: Point, v: Point, allowed: set[Dedge] | None) -> Dedge:
        """Successor of u->v in the face to its left: the outgoing edge at v
        whose direction is first strictly clockwise from the reversed one."""
        rev = (u[0] - v[0], u[1] - v[1])
        best = None
        best_key = None
        for w in self.rotation[v]:
            if allowed is not None and (v, w) not in allowed:
                continue
            d = (w[0] - v[0], w[1] - v[1])
            k = _ccw_key(rev, d)
            if k[0] == 3:
                continue  # the twin; only a dead end would take it
            if best_key is None or k > best_key:
                best, best_key = w, k
        if best is None:
            raise GeometryError("dangling boundary at %s" % (v,))
        return (v, best)

    def trace(self, directed: list[Dedge] | None = None):
        """Trace faces.  Returns (cycles, dedge_cycle): each cycle is a list of
        directed edgelets forming a simple loop; dedge_cycle maps every traced
        directed edge to its cycle index."""
        if directed is None:
            directed_list = []
            for u, v in self.edgelets:
                directed_list.append((u, v))
                directed_list.append((v, u))
            allowed = None
        else:
            directed_list = sorted(directed)
            allowed = set(directed_list)
        remaining = set(directed_list)
        cycles: list[list[Dedge]] = []
        dedge_cycle: dict[Dedge, int] = {}
        for start in sorted(directed_list):
            if start not in remaining:
                continue
            walk = []
            e = start
            while True:
                if e not in remaining:
                    raise GeometryError("face trace re-entered %s" % (e,))
                walk.append(e)
                remaining.discard(e)
                e = self._next_dedge(e[0], e[1], allowed)
                if e == start:
                    break
            for loop in _simple_loops(walk):
                idx = len(cycles)
                cycles.append(loop)
                for de in loop:
                    dedge_cycle[de] = idx
        return cycles, dedge_cycle


def _simple_loops(walk: list[Dedge]) -> list[list[Dedge]]:
    """Split a closed directed walk into simple loops at repeated vertices."""
    loops = []
    path: list[Dedge] = []
    pos: dict[Point, int] = {}
    for e in walk:
        u, v = e
        if u not in pos:
            pos[u] = len(path)
        path.append(e)
        if v in pos:
            s = pos[v]
            loop = path[s:]
            for a, _ in loop:
                pos.pop(a, None)
            del path[s:]
            loops.append(loop)
    if path:
        raise GeometryError("open walk in face trace")
    return loops


def _loop_ring(loop: list[Dedge]) -> tuple[Point, ...]:
    return tuple(e[0] for e in loop)


def _loop_region(outer, holes) -> Region:
    return Region(simplify_ring(_loop_ring(outer)),
                  tuple(simplify_ring(_loop_ring(h)) for h in holes))


def _loop_area2(loop: list[Dedge]) -> Fraction:
    return ring_area2(_loop_ring(loop))


def _leftmost_lowest_vertex(loop: list[Dedge]) -> Point:
    return min(e[0] for e in loop)


class _FaceAssembler:
    """Groups traced cycles into faces: one ccw outer plus cw hole contours."""

    def __init__(self, subdivision: PlanarSubdivision, cycles, dedge_cycle,
                 restricted: set[Dedge] | None = None):
        self.sub = subdivision
        self.cycles = cycles
        self.dedge_cycle = dedge_cycle
        self.restricted = restricted
        self.areas = [_loop_area2(c) for c in cycles]
        if any(a == 0 for a in self.areas):
            raise GeometryError("zero-area face loop")
        self.parent = list(range(len(cycles)))
        self.unbounded_mark = [False] * len(cycles)
        if restricted is None:
            self.shoot_edges = subdivision.edgelets
        else:
            self.shoot_edges = sorted({tuple(sorted(e)) for e in restricted})
        self.shoot_vertices = sorted({p for e in self.shoot_edges for p in e})

    def _find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def _union(self, i: int, j: int):
        ri, rj = self._find(i), self._find(j)
        if ri != rj:
            self.parent[ri] = rj

    def _dedge_face_cycle(self, de: Dedge) -> int | None:
        if self.restricted is not None and de not in self.restricted:
            return None
        return self.dedge_cycle.get(de)

    def _face_cycle_at_vertex(self, u: Point) -> int | None:
        """Cycle bounding the face whose wedge at u contains direction +x."""
        plus_x = (Fraction(1), Fraction(0))
        best = None
        best_key = None
        for w in self.sub.rotation[u]:
            if self.restricted is not None and (u, w) not in self.restricted:
                continue
            k = _ccw_key(plus_x, (w[0] - u[0], w[1] - u[1]))
            if best_key is None or k > best_key:
                best, best_key = w, k
        if best is None:
            return None
        # the face left of (u -> best) spans ccw from dir(best) to the next
        # direction, a wedge that wraps through +x
        return self._dedge_face_cycle((u, best))

    def _link_contour(self, ci: int):
        """Attach cw contour ci to the cycle bounding the same face, found by
        exact leftward ray shooting from its leftmost-lowest vertex."""
        w = _leftmost_lowest_vertex(self.cycles[ci])
        wx, wy = w
        best_x = None
        best_edge = None
        for a, b in self.shoot_edges:
            y1, y2 = a[1], b[1]
            if y1 == y2:
                continue
            lo, hi = (a, b) if y1 < y2 else (b, a)
            if not (lo[1] < wy < hi[1]):
                continue  # strict: endpoint hits handled as vertex hits
            xs = lo[0] + (wy - lo[1]) * (hi[0] - lo[0]) / (hi[1] - lo[1])
            if xs >= wx:
                continue
            if best_x is None or xs > best_x:
                best_x, best_edge = xs, (a, b)
        vertex_hit = None
        for u in self.shoot_vertices:
            if u[1] == wy and u[0] < wx and (best_x is None or u[0] > best_x):
                if vertex_hit is None or u[0] > vertex_hit[0]:
                    vertex_hit = u
        if vertex_hit is not None:
            target = self._face_cycle_at_vertex(vertex_hit)
        elif best_edge is not None:
            a, b = best_edge
            g = ((best_x + wx) / 2, wy)
            de = (a, b) if orient(a, b, g) > 0 else (b, a)
            target = self._dedge_face_cycle(de)
        else:
            target = None
        if target is None:
            self.unbounded_mark[ci] = True
        else:
            self._union(ci, target)

    def assemble(self):
        """Returns (faces, cycle_face): faces are (outer_loop, hole_loops);
        cycle_face maps cycle index -> face index or None for the unbounded
        face."""
        for ci, a in enumerate(self.areas):
            if a < 0:
                self._link_contour(ci)
        groups: dict[int, list[int]] = {}
        for i in range(len(self.cycles)):
            groups.setdefault(self._find(i), []).append(i)
        cycle_face: dict[int, int | None] = {}
        faces = []
        for _, members in sorted(groups.items()):
            outers = [i for i in members if self.areas[i] > 0]
            if any(self.unbounded_mark[i] for i in members):
                if outers:
                    raise GeometryError("ccw cycle linked to the unbounded face")
                for i in members:
                    cycle_face[i] = None
                continue
            if len(outers) != 1:
                raise GeometryError("face group with %d outer cycles" % len(outers))
            fidx = len(faces)
            holes = [self.cycles[i] for i in members if self.areas[i] < 0]
            holes.sort(key=_leftmost_lowest_vertex)
            faces.append((self.cycles[outers[0]], holes))
            for i in members:
                cycle_face[i] = fidx
        return faces, cycle_face


def representative_point(r: Region) -> Point:
    """An exact interior point: midpoint of the first span of a horizontal
    line placed strictly between the two lowest distinct vertex heights."""
    ys = sorted({p[1] for ring in r.all_rings() for p in ring})
    if len(ys) < 2:
        raise GeometryError("degenerate region")
    y = (ys[0] + ys[1]) / 2
    xs = []
    for ring in r.all_rings():
        for a, b in ring_edges(ring):
            (x1, y1), (x2, y2) = a, b
            if (y1 < y < y2) or (y2 < y < y1):
                xs.append(x1 + (y - y1) * (x2 - x1) / (y2 - y1))
    xs.sort()
    if len(xs) < 2:
        raise GeometryError("no interior span found")
    return ((xs[0] + xs[1]) / 2, y)


@dataclass(frozen=True)
class Overlay:
    """Cells of the arrangement restricted to the union of the inputs."""

    cells: tuple[Region, ...]
    cell_membership: tuple[frozenset[int], ...]
    adjacency: tuple[tuple[int, int], ...]
    cell_points: tuple[Point, ...]


class _BuiltArrangement:
    def __init__(self, inputs: list[Region]):
        self.inputs = inputs
        segments = []
        for reg in inputs:
            for ring in reg.all_rings():
                segments.extend(ring_edges(ring))
        self.edgelets = split_segments(segments)
        self.sub = PlanarSubdivision(self.edgelets)
        self.cycles, self.dedge_cycle = self.sub.trace()
        assembler = _FaceAssembler(self.sub, self.cycles, self.dedge_cycle)
        self.faces, self.cycle_face = assembler.assemble()
        self.face_regions = []
        self.face_points = []
        for outer, holes in self.faces:
            reg = _loop_region(outer, holes)
            self.face_regions.append(reg)
            self.face_points.append(representative_point(reg))
        self.face_membership = []
        for p in self.face_points:
            mem = frozenset(i for i, reg in enumerate(inputs)
                            if point_in(reg, p) == "inside")
            self.face_membership.append(mem)

    def dedge_face(self, de: Dedge) -> int | None:
        return self.cycle_face[self.dedge_cycle[de]]


def overlay(inputs: list[Region]) -> Overlay:
    """Arrangement cells covering exactly the union of the inputs."""
    arr = _BuiltArrangement(inputs)
    keep = [i for i, mem in enumerate(arr.face_membership) if mem]
    keep.sort(key=lambda i: min(arr.face_regions[i].outer))
    remap = {old: new for new, old in enumerate(keep)}
    adjacency = set()
    for u, v in arr.edgelets:
        f1 = arr.dedge_face((u, v))
        f2 = arr.dedge_face((v, u))
        if f1 in remap and f2 in remap and f1 != f2:
            a, b = sorted((remap[f1], remap[f2]))
            adjacency.add((a, b))
    return Overlay(
        cells=tuple(arr.face_regions[i] for i in keep),
        cell_membership=tuple(arr.face_membership[i] for i in keep),
        adjacency=tuple(sorted(adjacency)),
        cell_points=tuple(arr.face_points[i] for i in keep),
    )


def _extract(arr: _BuiltArrangement, kept: set[int]) -> list[Region]:
    """Assemble the regularized union of the kept faces into disjoint regions."""
    selected: list[Dedge] = []
    for u, v in arr.edgelets:
        f1 = arr.dedge_face((u, v))
        f2 = arr.dedge_face((v, u))
        k1 = f1 in kept
        k2 = f2 in kept
        if k1 and not k2:
            selected.append((u, v))
        elif k2 and not k1:
            selected.append((v, u))
    if not selected:
        return []
    cycles, dedge_cycle = arr.sub.trace(selected)
    assembler = _FaceAssembler(arr.sub, cycles, dedge_cycle, restricted=set(selected))
    faces, _ = assembler.assemble()
    out = [_loop_region(outer, holes) for outer, holes in faces]
    out.sort(key=lambda r: min(r.outer))
    return out


def boolean(a: list[Region], b: list[Region], op: str) -> list[Region]:
    """Exact regularized boolean over two sets of regions."""
    if op not in ("union", "intersection", "difference"):
        raise GeometryError("unknown boolean op %r" % op)
    inputs = list(a) + list(b)
    if not inputs:
        return []
    arr = _BuiltArrangement(inputs)
    na = len(a)
    kept = set()
    for i, mem in enumerate(arr.face_membership):
        in_a = any(k < na for k in mem)
        in_b = any(k >= na for k in mem)
        if op == "union" and (in_a or in_b):
            kept.add(i)
        elif op == "intersection" and (in_a and in_b):
            kept.add(i)
        elif op == "difference" and (in_a and not in_b):
            kept.add(i)
    return _extract(arr, kept)


def union_all(regions: list[Region]) -> list[Region]:
    return boolean(list(regions), [], "union")


def covers(p: Region, pieces: list[Region]) -> tuple[bool, list[Region]]:
    """Exact containment test: do the pieces cover p?  Returns the residue."""
    residue = boolean([p], list(pieces), "difference")
    return (not residue), residue


def regions_equal(a: Region, b: Region) -> bool:
    return not boolean([a], [b], "difference") and not boolean([b], [a], "difference")


def clip_to_square(p: Region, lower_left: Point) -> list[Region]:
    """Closures of the connected components of interior(p) cap S, where S is
    the unit square at the given lower-left corner.  Every component is a
    single overlay cell of {p, S}; ordered by leftmost-lowest vertex."""
    x, y = lower_left
    square = Region(((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)))
    bx1, by1, bx2, by2 = p.bbox()
    if x >= bx2 or x + 1 <= bx1 or y >= by2 or y + 1 <= by1:
        return []
    arr = _BuiltArrangement([p, square])
    comps = [arr.face_regions[i] for i, mem in enumerate(arr.face_membership)
             if mem >= {0, 1}]
    comps.sort(key=lambda r: min(r.outer))
    return comps


def intersection_area(a: Region, b: Region) -> Fraction:
    parts = boolean([a], [b], "intersection")
    return sum((r.area() for r in parts), Fraction(0))
