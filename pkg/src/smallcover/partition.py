"""Cover-to-partition conversion by overlay-cell ownership.

Every cell of the overlay of the cover's pieces is assigned to one piece
containing it, with each piece's owned cells kept edge-connected; the
resulting cell unions are interior-disjoint connected pieces covering the
polygon with no more pieces than the cover.  Backtracking over ownerships is
complete, so exhaustion is a falsification event, not an expected outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import boolean, covers, intersection_area, overlay, union_all
from .cover import Cover
from .geometry import GeometryError, Region, linf_diameter, validate_region


class SearchExhaustedError(GeometryError):
    """No cell assignment exists; by the cover/partition equivalence this
    should never fire for a cover of complete pieces."""


@dataclass(frozen=True)
class PartitionPart:
    owner: int
    geometry: Region


def _connectable(owned: set[int], usable: set[int], nbrs: dict[int, set[int]]) -> bool:
    """Can all owned cells lie in one connected blob within usable cells?"""
    if len(owned) <= 1:
        return True
    start = next(iter(owned))
    seen = {start}
    stack = [start]
    while stack:
        c = stack.pop()
        for d in nbrs[c]:
            if d in usable and d not in seen:
                seen.add(d)
                stack.append(d)
    return owned <= seen


def cover_to_partition(p: Region, c: Cover, node_budget: int = 2_000_000) -> list[PartitionPart]:
    """Partition p into connected cell-unions, one per surviving cover piece.

    Cells are assigned most-constrained-first (descending membership degree);
    owners are tried in ascending piece order; piece connectivity is enforced
    incrementally.  Pieces that end up owning no cells are dropped.
    """
    ov = overlay([pc.geometry for pc in c.pieces])
    ncells = len(ov.cells)
    nbrs: dict[int, set[int]] = {i: set() for i in range(ncells)}
    for a, b in ov.adjacency:
        nbrs[a].add(b)
        nbrs[b].add(a)
    order = sorted(range(ncells),
                   key=lambda i: (-len(ov.cell_membership[i]), i))
    owner_of: dict[int, int] = {}
    owned: dict[int, set[int]] = {q: set() for q in range(len(c.pieces))}
    nodes = 0

    def usable(q: int) -> set[int]:
        out = set(owned[q])
        for i in range(ncells):
            if i not in owner_of and q in ov.cell_membership[i]:
                out.add(i)
        return out

    def assign(pos: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchExhaustedError("cell-assignment budget exhausted")
        if pos == ncells:
            return all(_connectable(owned[q], owned[q], nbrs) for q in owned)
        cell = order[pos]
        for q in sorted(ov.cell_membership[cell]):
            owner_of[cell] = q
            owned[q].add(cell)
            ok = all(_connectable(owned[r], usable(r), nbrs) for r in owned if owned[r])
            if ok and assign(pos + 1):
                return True
            owned[q].discard(cell)
            del owner_of[cell]
        return False

    if ncells and not assign(0):
        raise SearchExhaustedError(
            "no connected cell assignment for this cover (Thm-6 falsification)")
    parts = []
    for q in sorted(owned):
        cells = sorted(owned[q])
        if not cells:
            continue
        merged = union_all([ov.cells[i] for i in cells])
        if len(merged) != 1:
            raise SearchExhaustedError("owned cells merged into %d regions" % len(merged))
        parts.append(PartitionPart(q, merged[0]))
    return parts


@dataclass(frozen=True)
class PartitionReport:
    problems: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.problems


def validate_partition(p: Region, parts: list[PartitionPart]) -> PartitionReport:
    """Union equals p, pairwise interior-disjoint, connected, unit-square fit."""
    problems = []
    geoms = [part.geometry for part in parts]
    for i, g in enumerate(geoms):
        rep = validate_region(g)
        if not rep.valid:
            problems.append("part %d: invalid region (%s)" % (i, "; ".join(rep.problems)))
            continue
        if linf_diameter(g) > 1:
            problems.append("part %d: does not fit a unit square" % i)
    ok, residue = covers(p, geoms)
    if not ok:
        problems.append("union deficit: %d residue region(s), area %s" %
                        (len(residue), sum((r.area() for r in residue), Fraction(0))))
    excess = boolean(geoms, [p], "difference")
    if excess:
        problems.append("parts overflow the polygon")
    for i in range(len(geoms)):
        for j in range(i + 1, len(geoms)):
            a = intersection_area(geoms[i], geoms[j])
            if a != 0:
                problems.append("parts %d and %d overlap with area %s" % (i, j, a))
    return PartitionReport(tuple(problems))
