"""Local-search cover optimization: k-swaps via exact LPs over placement slots.

A swap removes k pieces and tries to re-cover their residue with k-1 new
squares.  New square edges are placed combinatorially against the event grid
of the surviving arrangement (event values and event-1 values, so a slot for
the left edge pins the orientation of both vertical lines against every
fixed line; same for y).  Each slot is one combinatorial structure, so by
the all-or-none property of structures it suffices to test the max-t vertex
realization of the slot LP.  Every accepted proposal is certified by an
exact boolean cover check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import boolean, covers
from .cover import (
    CompletePiece,
    Cover,
    SquarePlacement,
    components_of,
    grid_cell_count,
    grid_initial_cover,
)
from .geometry import GeometryError, Point, Region, ring_edges
from .lp import LPInstance, constraint, make_lp, rebase_to_basic, solve_max_t

HALF = Fraction(1, 2)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# combinatorial structures (the Lemma-5 object)

@dataclass(frozen=True)
class Line:
    """a*x + b*y = c with c possibly depending on a square center variable."""

    a: Fraction
    b: Fraction
    c_const: Fraction
    c_var: str | None = None  # center variable name ('x3'/'y3') shifted by +-1/2
    c_var_coeff: Fraction = Fraction(0)

    def is_parallel(self, other: "Line") -> bool:
        return self.a * other.b - self.b * other.a == 0


def _poly_lines(p: Region) -> list[Line]:
    lines = []
    seen = set()
    for ring in p.all_rings():
        for (x1, y1), (x2, y2) in ring_edges(ring):
            a = y2 - y1
            b = x1 - x2
            c = a * x1 + b * y1
            if a < 0 or (a == 0 and b < 0):
                a, b, c = -a, -b, -c
            scale = a if a != 0 else b
            a, b, c = a / scale, b / scale, c / scale
            if (a, b, c) not in seen:
                seen.add((a, b, c))
                lines.append(Line(a, b, c))
    return lines


def _square_lines(idx: int, center: Point | None) -> list[Line]:
    """left, right, bottom, top lines of square idx; symbolic when free."""
    out = []
    for axis, which, off in (("x", "left", -HALF), ("x", "right", HALF),
                             ("y", "bottom", -HALF), ("y", "top", HALF)):
        a, b = (ONE, Fraction(0)) if axis == "x" else (Fraction(0), ONE)
        if center is None:
            out.append(Line(a, b, off, c_var="%s%d" % (axis, idx), c_var_coeff=ONE))
        else:
            base = center[0] if axis == "x" else center[1]
            out.append(Line(a, b, base + off))
    return out


class _Affine:
    """Affine rational expression over named variables."""

    __slots__ = ("const", "terms")

    def __init__(self, const=Fraction(0), terms=None):
        self.const = Fraction(const)
        self.terms = dict(terms or {})

    @classmethod
    def of_line_c(cls, line: Line) -> "_Affine":
        t = {line.c_var: line.c_var_coeff} if line.c_var else {}
        return cls(line.c_const, t)

    def scaled(self, f: Fraction) -> "_Affine":
        return _Affine(self.const * f, {v: c * f for v, c in self.terms.items()})

    def plus(self, other: "_Affine") -> "_Affine":
        t = dict(self.terms)
        for v, c in other.terms.items():
            t[v] = t.get(v, Fraction(0)) + c
        return _Affine(self.const + other.const, t)

    def evaluate(self, env: dict[str, Fraction]) -> Fraction:
        return self.const + sum(c * env[v] for v, c in self.terms.items())


def _intersection_expr(l1: Line, l2: Line) -> tuple[_Affine, _Affine]:
    """Intersection point of two non-parallel lines as affine expressions."""
    det = l1.a * l2.b - l1.b * l2.a
    c1 = _Affine.of_line_c(l1)
    c2 = _Affine.of_line_c(l2)
    qx = c1.scaled(l2.b / det).plus(c2.scaled(-l1.b / det))
    qy = c2.scaled(l1.a / det).plus(c1.scaled(-l2.a / det))
    return qx, qy


def _triple_expr(l1: Line, l2: Line, l3: Line) -> _Affine:
    """Affine form whose sign tells on which side of l3 the point l1^l2 lies."""
    qx, qy = _intersection_expr(l1, l2)
    c3 = _Affine.of_line_c(l3)
    return qx.scaled(l3.a).plus(qy.scaled(l3.b)).plus(c3.scaled(Fraction(-1)))


@dataclass(frozen=True)
class CombinatorialStructure:
    """Orientation data of the line arrangement plus per-square components."""

    lines: tuple[Line, ...]
    free_squares: tuple[int, ...]          # square indices with variable centers
    orientation_data: tuple[tuple[int, int, int, int], ...]  # (i, j, k, sign)
    component_choice: tuple[int, ...]      # per square


def structure_lines(p: Region, centers: list[Point | None]) -> list[Line]:
    lines = _poly_lines(p)
    for i, c in enumerate(centers):
        lines.extend(_square_lines(i, c))
    return lines


def structure_of(p: Region, pieces: list[CompletePiece]) -> CombinatorialStructure:
    """Extract exact orientation data at the pieces' concrete centers."""
    centers = [pc.square.center for pc in pieces]
    lines = structure_lines(p, list(centers))
    env: dict[str, Fraction] = {}
    data = []
    n = len(lines)
    for i in range(n):
        for j in range(i + 1, n):
            if lines[i].is_parallel(lines[j]):
                continue
            for k in range(n):
                if k == i or k == j:
                    continue
                val = _triple_expr(lines[i], lines[j], lines[k]).evaluate(env)
                data.append((i, j, k, (val > 0) - (val < 0)))
    return CombinatorialStructure(
        lines=tuple(lines),
        free_squares=(),
        orientation_data=tuple(data),
        component_choice=tuple(pc.component_index for pc in pieces),
    )


def lp_of_structure(s: CombinatorialStructure) -> LPInstance:
    """One constraint per recorded triple that involves a free-square line;
    strict orientations become C >= t, coincidences stay equalities."""
    variables = []
    for idx in s.free_squares:
        variables.extend(("x%d" % idx, "y%d" % idx))
    cons = []
    for i, j, k, sign in s.orientation_data:
        expr = _triple_expr(s.lines[i], s.lines[j], s.lines[k])
        if not expr.terms:
            continue  # constant triple: checked once at extraction time
        coeffs = dict(expr.terms)
        if sign == 0:
            cons.append(constraint(coeffs, expr.const, "eq"))
        else:
            coeffs = {v: c * sign for v, c in coeffs.items()}
            coeffs["t"] = Fraction(-1)
            cons.append(constraint(coeffs, expr.const * sign, "ge"))
    return make_lp(variables, cons)


def realization_is_cover(p: Region, s: CombinatorialStructure,
                         assignment: dict[str, Fraction],
                         fixed_pieces: list[CompletePiece]) -> bool:
    """Build the pieces of a realization explicitly and test union == p.

    fixed_pieces supplies squares whose centers are not variables of s; free
    squares take their centers from the assignment and their component from
    s.component_choice.
    """
    geoms = [pc.geometry for pc in fixed_pieces]
    for pos, idx in enumerate(s.free_squares):
        center = (assignment["x%d" % idx], assignment["y%d" % idx])
        comps = components_of(p, SquarePlacement(center))
        choice = s.component_choice[idx]
        if not 0 <= choice < len(comps):
            raise GeometryError("component choice %d invalid at realization" % choice)
        geoms.append(comps[choice])
    ok, _ = covers(p, geoms)
    return ok


# ---------------------------------------------------------------------------
# slot enumeration

@dataclass(frozen=True)
class _Slot:
    """Placement of a square's lower edge against the event grid."""

    kind: str            # 'at' | 'in'
    lo: Fraction
    hi: Fraction | None  # None for 'at'

    def constraints(self, var: str):
        if self.kind == "at":
            return [constraint({var: 1}, -self.lo, "eq")]
        out = [constraint({var: 1, "t": -1}, -self.lo, "ge")]
        if self.hi is not None:
            out.append(constraint({var: -1, "t": -1}, self.hi, "ge"))
        return out

    def interval(self) -> tuple[Fraction, Fraction]:
        return (self.lo, self.lo) if self.kind == "at" else (self.lo, self.hi)


def _axis_events(p: Region, survivors: list[CompletePiece], axis: int) -> list[Fraction]:
    """Event coordinates: all pairwise intersections of the fixed lines (which
    include every polygon vertex) plus the survivors' square edges."""
    lines = _poly_lines(p)
    for i, pc in enumerate(survivors):
        lines.extend(_square_lines(1000 + i, pc.square.center))
    pts = set()
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if lines[i].is_parallel(lines[j]):
                continue
            qx, qy = _intersection_expr(lines[i], lines[j])
            pts.add(qx.const if axis == 0 else qy.const)
    return sorted(pts)


def _edge_slots(events: list[Fraction], lo: Fraction, hi: Fraction) -> list[_Slot]:
    """Slots for a lower-edge coordinate whose value can fall in [lo, hi]:
    'at' each grid value plus 'in' each grid gap, over the refined grid of
    events and events-1 (so both square edges get pinned against all events),
    extended by sentinels so the range is always tiled."""
    if hi < lo:
        return []
    grid = sorted(set(events) | {e - 1 for e in events})
    grid = [g for g in grid if lo - 2 < g < hi + 2]
    grid = [lo - 2] + grid + [hi + 2]
    slots: list[_Slot] = []
    for i, g in enumerate(grid):
        if i > 0 and lo <= g <= hi:
            slots.append(_Slot("at", g, None))
        if i + 1 < len(grid):
            a, b = g, grid[i + 1]
            if a < b and b > lo and a < hi:
                slots.append(_Slot("in", a, b))
    return slots


_REL_CASES = (
    ("lt", Fraction(-1)), ("eq", Fraction(-1)), ("between", (Fraction(-1), Fraction(0))),
    ("eq", Fraction(0)), ("between", (Fraction(0), Fraction(1))),
    ("eq", Fraction(1)), ("gt", Fraction(1)),
)


def _relation_constraints(var1: str, var2: str, case) -> list:
    """Pin d = var1 - var2 into one of the seven unit-offset cases."""
    kind, val = case
    d = {var1: Fraction(1), var2: Fraction(-1)}
    if kind == "eq":
        return [constraint(dict(d), -val, "eq")]
    if kind == "lt":
        return [constraint({var1: -1, var2: 1, "t": -1}, val, "ge")]
    if kind == "gt":
        return [constraint({var1: 1, var2: -1, "t": -1}, -val, "ge")]
    lo, hi = val
    return [constraint({var1: 1, var2: -1, "t": -1}, -lo, "ge"),
            constraint({var1: -1, var2: 1, "t": -1}, hi, "ge")]


def _case_possible(case, span: tuple[Fraction, Fraction]) -> bool:
    kind, val = case
    lo, hi = span
    if kind == "eq":
        return lo <= val <= hi
    if kind == "lt":
        return lo < val
    if kind == "gt":
        return hi > val
    return lo < val[1] and hi > val[0]


# ---------------------------------------------------------------------------
# swaps

@dataclass(frozen=True)
class SwapProposal:
    removed: tuple[int, ...]
    new_pieces: tuple[CompletePiece, ...]
    lp: LPInstance | None
    realization: dict | None
    slot_id: str

    def new_count(self) -> int:
        return len(self.new_pieces)


def _residue_bbox(residue: list[Region]):
    xs1, ys1, xs2, ys2 = zip(*(r.bbox() for r in residue))
    return min(xs1), min(ys1), max(xs2), max(ys2)


def _component_containing(p: Region, center: Point, residue: list[Region]):
    comps = components_of(p, SquarePlacement(center))
    for idx, comp in enumerate(comps):
        leftover = boolean(residue, [comp], "difference")
        if not leftover:
            return idx, comp
    return None, None


def find_swap(p: Region, c: Cover, k: int, trace: list | None = None):
    """First k-subset of the cover exchangeable for k-1 complete pieces, in
    deterministic enumeration order; None when the cover is a k-local optimum
    for exactly-k swaps."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > 3:
        raise ValueError("k is capped at 3")
    m = len(c.pieces)
    if k > m:
        return None
    for subset in itertools.combinations(range(m), k):
        survivors = [c.pieces[i] for i in range(m) if i not in subset]
        ok, residue = covers(p, [pc.geometry for pc in survivors])
        if ok:
            # survivors already cover: re-add k-1 of the removed pieces
            newbies = tuple(c.pieces[i] for i in subset[:k - 1])
            return SwapProposal(subset, newbies, None, None, "redundant")
        proposal = _swap_with_new(p, subset, survivors, residue, k - 1, trace)
        if proposal is not None:
            return proposal
    return None


def _swap_with_new(p, subset, survivors, residue, n_new, trace):
    if n_new == 0:
        return None
    bx1, by1, bx2, by2 = _residue_bbox(residue)
    if n_new == 1 and (bx2 - bx1 > 1 or by2 - by1 > 1):
        return None
    if n_new == 2 and (bx2 - bx1 > 2 or by2 - by1 > 2):
        return None
    ex = _axis_events(p, survivors, 0)
    ey = _axis_events(p, survivors, 1)
    if n_new == 1:
        xs = _edge_slots(ex, bx2 - 1, bx1)
        ys = _edge_slots(ey, by2 - 1, by1)
        if not xs or not ys:
            return None
        for sx in xs:
            for sy in ys:
                prop = _try_single(p, subset, survivors, residue, sx, sy, trace)
                if prop is not None:
                    return prop
        return None
    return _try_double(p, subset, survivors, residue, ex, ey, bx1, by1, bx2, by2, trace)


def _try_single(p, subset, survivors, residue, sx, sy, trace):
    cons = []
    cons += sx.constraints("lx")
    cons += sy.constraints("ly")
    # the new square must contain the residue's bounding box
    bx1, by1, bx2, by2 = _residue_bbox(residue)
    cons.append(constraint({"lx": -1}, bx1, "ge"))           # lx <= bx1
    cons.append(constraint({"lx": 1}, -(bx2 - 1), "ge"))     # lx + 1 >= bx2
    cons.append(constraint({"ly": -1}, by1, "ge"))
    cons.append(constraint({"ly": 1}, -(by2 - 1), "ge"))
    lp = make_lp(["lx", "ly"], cons)
    slot_id = "x:%s%s y:%s%s" % (sx.kind, sx.interval(), sy.kind, sy.interval())
    res = solve_max_t(lp)
    if res["status"] != "optimal" or res["t_star"] <= 0:
        if trace is not None:
            trace.append((subset, slot_id, res["status"], None))
        return None
    asg = res["assignment"]
    center = (asg["lx"] + HALF, asg["ly"] + HALF)
    idx, comp = _component_containing(p, center, residue)
    if trace is not None:
        trace.append((subset, slot_id, "t=%s" % res["t_star"], idx is not None))
    if idx is None:
        return None
    piece = CompletePiece(SquarePlacement(center), idx, comp)
    okall, _ = covers(p, [pc.geometry for pc in survivors] + [comp])
    if not okall:
        return None
    return SwapProposal(tuple(subset), (piece,), lp, asg, slot_id)


def _try_double(p, subset, survivors, residue, ex, ey, bx1, by1, bx2, by2, trace):
    xs = _edge_slots(ex, bx1 - 1, bx2)
    ys = _edge_slots(ey, by1 - 1, by2)
    # wlog square 1 is lexicographically no later than square 2
    ordered_x = [c for c in _REL_CASES
                 if c[0] in ("lt",) or (c[0] == "eq") or
                 (c[0] == "between" and c[1][1] <= 0)]
    for sx1 in xs:
        for sx2 in xs:
            lo = min(sx1.interval()[0], sx2.interval()[0])
            hi = max(sx1.interval()[1], sx2.interval()[1])
            if lo > bx1 or hi + 1 < bx2:
                continue  # the two x-spans cannot reach both bbox ends
            span_x = (sx1.interval()[0] - sx2.interval()[1],
                      sx1.interval()[1] - sx2.interval()[0])
            for relx in ordered_x:
                if relx[0] == "eq" and relx[1] > 0:
                    continue
                if not _case_possible(relx, span_x):
                    continue
                tie_x = relx == ("eq", Fraction(0))
                for sy1 in ys:
                    for sy2 in ys:
                        lo = min(sy1.interval()[0], sy2.interval()[0])
                        hi = max(sy1.interval()[1], sy2.interval()[1])
                        if lo > by1 or hi + 1 < by2:
                            continue
                        span_y = (sy1.interval()[0] - sy2.interval()[1],
                                  sy1.interval()[1] - sy2.interval()[0])
                        for rely in _REL_CASES:
                            if tie_x and (rely[0] == "gt" or
                                          (rely[0] == "eq" and rely[1] > 0) or
                                          (rely[0] == "between" and rely[1][0] >= 0)):
                                continue
                            if not _case_possible(rely, span_y):
                                continue
                            prop = _try_pair(p, subset, survivors, residue,
                                             (sx1, sy1, sx2, sy2), (relx, rely),
                                             trace)
                            if prop is not None:
                                return prop
    return None


def _try_pair(p, subset, survivors, residue, slots, rels, trace):
    sx1, sy1, sx2, sy2 = slots
    relx, rely = rels
    bx1, by1, bx2, by2 = _residue_bbox(residue)
    cons = []
    cons += sx1.constraints("lx1")
    cons += sy1.constraints("ly1")
    cons += sx2.constraints("lx2")
    cons += sy2.constraints("ly2")
    cons += _relation_constraints("lx1", "lx2", relx)
    cons += _relation_constraints("ly1", "ly2", rely)
    # joint bounding-box pruning: the union of both squares must span it
    kind, val = relx
    left_var, right_var = ("lx1", "lx2")
    if kind in ("gt",) or (kind == "eq" and val > 0) or \
            (kind == "between" and val[0] >= 0):
        left_var, right_var = "lx2", "lx1"
    cons.append(constraint({left_var: -1}, bx1, "ge"))
    cons.append(constraint({right_var: 1}, -(bx2 - 1), "ge"))
    lp = make_lp(["lx1", "ly1", "lx2", "ly2"], cons)
    res = solve_max_t(lp)
    slot_id = "pair %s %s" % (relx, rely)
    if res["status"] != "optimal" or res["t_star"] <= 0:
        if trace is not None:
            trace.append((subset, slot_id, res["status"], None))
        return None
    asg = res["assignment"]
    centers = [(asg["lx1"] + HALF, asg["ly1"] + HALF),
               (asg["lx2"] + HALF, asg["ly2"] + HALF)]
    comp_lists = [components_of(p, SquarePlacement(ce)) for ce in centers]
    surv_geoms = [pc.geometry for pc in survivors]
    for i1, g1 in enumerate(comp_lists[0]):
        for i2, g2 in enumerate(comp_lists[1]):
            leftover = boolean(residue, [g1, g2], "difference")
            if leftover:
                continue
            okall, _ = covers(p, surv_geoms + [g1, g2])
            if okall:
                pieces = (CompletePiece(SquarePlacement(centers[0]), i1, g1),
                          CompletePiece(SquarePlacement(centers[1]), i2, g2))
                if trace is not None:
                    trace.append((subset, slot_id, "t=%s" % res["t_star"], True))
                return SwapProposal(tuple(subset), pieces, lp, asg, slot_id)
    if trace is not None:
        trace.append((subset, slot_id, "t=%s" % res["t_star"], False))
    return None


# ---------------------------------------------------------------------------
# rebasing onto a basic feasible solution after each swap

def full_cover_lp(p: Region, pieces: list[CompletePiece]) -> tuple[LPInstance, dict]:
    """LP over all square centers whose constraints pin the current structure:
    square edges vs polygon events, pairwise square offsets, plus a bounding
    box and the t <= 1 cap to keep the polytope bounded."""
    evx = _axis_events(p, [], 0)
    evy = _axis_events(p, [], 1)
    x1, y1, x2, y2 = p.bbox()
    cons = []
    env = {}
    for i, pc in enumerate(pieces):
        cx, cy = pc.square.center
        env["x%d" % i] = cx
        env["y%d" % i] = cy
        for var, val, events, lo, hi in (("x%d" % i, cx, evx, x1, x2),
                                         ("y%d" % i, cy, evy, y1, y2)):
            for e in events:
                for off in (-HALF, HALF):
                    cur = val + off - e
                    if cur == 0:
                        cons.append(constraint({var: 1}, off - e, "eq"))
                    elif cur > 0:
                        cons.append(constraint({var: 1, "t": -1}, off - e, "ge"))
                    else:
                        cons.append(constraint({var: -1, "t": -1}, e - off, "ge"))
            cons.append(constraint({var: 1}, -(lo - 2), "ge"))
            cons.append(constraint({var: -1}, hi + 2, "ge"))
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            for ax in ("x", "y"):
                vi, vj = "%s%d" % (ax, i), "%s%d" % (ax, j)
                d = env[vi] - env[vj]
                for off in (Fraction(-1), Fraction(0), Fraction(1)):
                    cur = d - off
                    if cur == 0:
                        cons.append(constraint({vi: 1, vj: -1}, -off, "eq"))
                    elif cur > 0:
                        cons.append(constraint({vi: 1, vj: -1, "t": -1}, -off, "ge"))
                    else:
                        cons.append(constraint({vi: -1, vj: 1, "t": -1}, off, "ge"))
    variables = []
    for i in range(len(pieces)):
        variables.extend(("x%d" % i, "y%d" % i))
    lp = make_lp(variables, cons).with_cap()
    # feasible starting t: smallest strict slack, capped at 1
    t0 = ONE
    for con in lp.constraints:
        cm = con.coeff_map()
        if con.relation == "ge" and cm.get("t"):
            slack = con.evaluate({**env, "t": Fraction(0)})
            margin = slack / -cm["t"] if cm["t"] < 0 else slack
            t0 = min(t0, margin)
    env["t"] = t0
    return lp, env


def rebase_cover(p: Region, pieces: list[CompletePiece]):
    """Move all squares onto a basic feasible solution of the full-cover LP
    without decreasing t, rebuilding the pieces at the new centers.  Falls
    back to the input when the rebased ordinals no longer reproduce a valid
    cover (component reordering across the walk)."""
    lp, env = full_cover_lp(p, pieces)
    if env["t"] <= 0:
        return pieces, None, lp
    sol = rebase_to_basic(lp, env)
    new_pieces = []
    for i, pc in enumerate(pieces):
        center = (sol["x%d" % i], sol["y%d" % i])
        comps = components_of(p, SquarePlacement(center))
        idx = pc.component_index
        if not 0 <= idx < len(comps):
            return pieces, None, lp
        new_pieces.append(CompletePiece(SquarePlacement(center), idx, comps[idx]))
    ok, _ = covers(p, [pc.geometry for pc in new_pieces])
    if not ok:
        return pieces, None, lp
    return new_pieces, sol, lp


# ---------------------------------------------------------------------------
# the local search loop

@dataclass
class SwapEvent:
    removed: tuple[int, ...]
    new_pieces: tuple[CompletePiece, ...]
    lp: LPInstance | None
    realization: dict | None
    rebase_lp: LPInstance | None
    rebase_solution: dict | None
    count_after: int


@dataclass
class LocalSearchResult:
    cover: Cover
    swaps: list[SwapEvent]
    budget_exhausted: bool
    initial_count: int

    @property
    def count(self) -> int:
        return len(self.cover.pieces)


def local_search(p: Region, k: int = 2, budget: int | None = None,
                 rebase: bool = True, trace: list | None = None) -> LocalSearchResult:
    """Grid initial cover followed by k-swaps until a k-local optimum.

    The step budget defaults to D*n (each swap removes one piece, so the loop
    can never legitimately need more steps)."""
    cover = grid_initial_cover(p)
    initial = cover.count()
    if budget is None:
        budget = max(1, grid_cell_count(p) * p.vertex_count())
    swaps: list[SwapEvent] = []
    exhausted = False
    while True:
        if len(swaps) >= budget:
            exhausted = True
            break
        prop = find_swap(p, cover, k, trace)
        if prop is None:
            break
        keep = [pc for i, pc in enumerate(cover.pieces) if i not in prop.removed]
        pieces = keep + list(prop.new_pieces)
        rb_lp = rb_sol = None
        if rebase:
            rebased, rb_sol, rb_lp = rebase_cover(p, pieces)
            if rb_sol is not None:
                pieces = rebased
        cover = Cover(tuple(pieces))
        swaps.append(SwapEvent(prop.removed, prop.new_pieces, prop.lp,
                               prop.realization, rb_lp, rb_sol, cover.count()))
    return LocalSearchResult(cover, swaps, exhausted, initial)
