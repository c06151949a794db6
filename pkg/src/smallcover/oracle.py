"""Brute-force ground truth: exact minimum small covers, partitions, set cover.

Candidate square positions are normalized onto the polygon's coordinate
events: any cover has a basic LP realization whose square edges are tight
against chains of events, so edge coordinates are drawn from the event set
shifted by small integers (and, in slow mode, pairwise event midpoints where
max-t vertices balance two constraints).  An iteratively refined point set
turns the search into exact set cover; every candidate answer is certified
by an exact boolean residue check before it is accepted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import covers, representative_point
from .cover import CompletePiece, Cover, components_of, grid_cell_count, square_from_lower_left
from .geometry import GeometryError, Region, point_in

K_MAX_LIMIT = 5
GRID_LIMIT = 9


class OracleError(GeometryError):
    pass


class UncoverableError(ValueError):
    pass


def _event_coords(p: Region, axis: int) -> list[Fraction]:
    vals = sorted({v[axis] for ring in p.all_rings() for v in ring})
    return vals


def _candidate_coords(events: list[Fraction], lo: Fraction, hi: Fraction,
                      mode: str, k_max: int) -> list[Fraction]:
    """Lower-edge candidates for one axis, clipped to [lo-1, hi]."""
    base = set(events)
    if mode == "slow":
        for i, a in enumerate(events):
            for b in events[i + 1:]:
                if 0 < b - a < 2:
                    base.add((a + b) / 2)
        shifts = range(-k_max, k_max + 1)
    else:
        shifts = (-1, 0)
    out = set()
    for e in base:
        for s in shifts:
            v = e + s
            if lo - 1 <= v <= hi:
                out.add(v)
    return sorted(out)


def candidate_squares(p: Region, mode: str = "normalized", k_max: int = K_MAX_LIMIT):
    x1, y1, x2, y2 = p.bbox()
    xs = _candidate_coords(_event_coords(p, 0), x1, x2, mode, k_max)
    ys = _candidate_coords(_event_coords(p, 1), y1, y2, mode, k_max)
    return [square_from_lower_left(x, y) for x in xs for y in ys]


def piece_universe(p: Region, squares) -> list[CompletePiece]:
    """All complete pieces from the candidate squares, deduped by geometry."""
    seen: dict[Region, CompletePiece] = {}
    ordered = []
    for sq in squares:
        for idx, geom in enumerate(components_of(p, sq)):
            if geom not in seen:
                piece = CompletePiece(sq, idx, geom)
                seen[geom] = piece
                ordered.append(piece)
    return ordered


def _min_point_cover(masks: list[int], full: int, cap: int):
    """Exact minimum subset of masks whose union is full, at most cap sets."""
    npts = full.bit_count()
    point_pieces: list[list[int]] = [[] for _ in range(npts)]
    for pi, m in enumerate(masks):
        mm = m
        while mm:
            b = (mm & -mm).bit_length() - 1
            point_pieces[b].append(pi)
            mm &= mm - 1
    if any(not pp for pp in point_pieces):
        return None
    best: list[int] | None = None

    def dfs(covered: int, chosen: list[int], limit: int):
        nonlocal best
        if covered == full:
            best = list(chosen)
            return True
        if len(chosen) >= limit:
            return False
        # most constrained uncovered point
        pick, pick_n = None, None
        un = full & ~covered
        while un:
            b = (un & -un).bit_length() - 1
            n = len(point_pieces[b])
            if pick_n is None or n < pick_n:
                pick, pick_n = b, n
            un &= un - 1
        for pi in point_pieces[pick]:
            chosen.append(pi)
            if dfs(covered | masks[pi], chosen, limit):
                return True
            chosen.pop()
        return False

    for limit in range(1, cap + 1):
        got = dfs(0, [], limit)
        if got:
            return best
    return None


@dataclass(frozen=True)
class OracleResult:
    opt: int
    witness: object  # Cover for the cover oracle, part list for partitions


def brute_force_opt_cover(p: Region, k_max: int, mode: str = "normalized"):
    """Exact minimum small cover with at most k_max complete pieces, or None.

    mode 'normalized' slides squares onto event +- 1 positions; mode 'slow'
    widens the grid to the full basic-solution closure (integer chains up to
    k_max plus pairwise midpoints).  Both certify candidates exactly.
    """
    if k_max > K_MAX_LIMIT:
        raise OracleError("k_max capped at %d" % K_MAX_LIMIT)
    if grid_cell_count(p) > GRID_LIMIT:
        raise OracleError("polygon too large for the brute-force oracle")
    pieces = piece_universe(p, candidate_squares(p, mode, k_max))
    if not pieces:
        return None
    area_lb = max(1, math.ceil(p.area()))
    if area_lb > k_max:
        return None
    points: list = [representative_point(p)]
    masks = [0] * len(pieces)

    def extend_masks(new_points):
        for pi, piece in enumerate(pieces):
            m = masks[pi]
            for j, q in enumerate(new_points, start=len(points) - len(new_points)):
                if point_in(piece.geometry, q) != "outside":
                    m |= 1 << j
            masks[pi] = m

    extend_masks(points)
    while True:
        full = (1 << len(points)) - 1
        sol = _min_point_cover(masks, full, k_max)
        if sol is None:
            return None
        chosen = [pieces[i] for i in sorted(sol)]
        ok, residue = covers(p, [pc.geometry for pc in chosen])
        if ok:
            return OracleResult(len(chosen), Cover(tuple(chosen)))
        fresh = [representative_point(residue[0])]
        points.extend(fresh)
        extend_masks(fresh)


def brute_force_opt_partition(p: Region, k_max: int, mode: str = "normalized"):
    """Minimum small partition via the cover oracle plus conversion (Thm-6
    style equivalence: the partition optimum equals the cover optimum)."""
    from .partition import cover_to_partition

    res = brute_force_opt_cover(p, k_max, mode)
    if res is None:
        return None
    parts = cover_to_partition(p, res.witness)
    return OracleResult(len(parts), tuple(parts))


def set_cover_exact(u_size: int, sets: list[set[int]]):
    """Exact minimum set cover by subset enumeration, smallest cardinality
    first; deterministic lexicographically least witness."""
    if u_size > 20:
        raise OracleError("universe capped at 20 elements")
    universe = frozenset(range(1, u_size + 1))
    union_all_sets = set()
    for s in sets:
        union_all_sets |= set(s)
    if not universe <= union_all_sets:
        raise UncoverableError("the sets do not cover the universe")
    import itertools

    for k in range(1, len(sets) + 1):
        for combo in itertools.combinations(range(len(sets)), k):
            got = set()
            for i in combo:
                got |= set(sets[i])
            if universe <= got:
                return {"k": k, "witness": list(combo)}
    raise UncoverableError("unreachable")
