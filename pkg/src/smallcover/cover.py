"""Cover model: unit-square placements, complete pieces, grid initial covers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import clip_to_square, covers
from .geometry import GeometryError, Point, Region, linf_diameter, rat


class EmptyIntersectionError(GeometryError):
    pass


class ComponentIndexError(GeometryError):
    pass


@dataclass(frozen=True)
class SquarePlacement:
    """Axis-aligned unit square given by its center."""

    center: Point

    @property
    def lower_left(self) -> Point:
        return (self.center[0] - Fraction(1, 2), self.center[1] - Fraction(1, 2))

    def as_region(self) -> Region:
        x, y = self.lower_left
        return Region(((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)))


def square_at(x, y) -> SquarePlacement:
    return SquarePlacement((rat(x), rat(y)))


def square_from_lower_left(x, y) -> SquarePlacement:
    return SquarePlacement((rat(x) + Fraction(1, 2), rat(y) + Fraction(1, 2)))


@dataclass(frozen=True)
class CompletePiece:
    """Closure of one connected component of interior(P) cap S."""

    square: SquarePlacement
    component_index: int
    geometry: Region

    def fits_unit_square(self) -> bool:
        return linf_diameter(self.geometry) <= 1


def components_of(p: Region, square: SquarePlacement) -> list[Region]:
    return clip_to_square(p, square.lower_left)


def make_complete_piece(p: Region, square: SquarePlacement, idx: int) -> CompletePiece:
    comps = components_of(p, square)
    if not comps:
        raise EmptyIntersectionError(
            "square at %s does not meet the polygon interior" % (square.center,))
    if not 0 <= idx < len(comps):
        raise ComponentIndexError(
            "component index %d out of range (have %d)" % (idx, len(comps)))
    return CompletePiece(square, idx, comps[idx])


@dataclass(frozen=True)
class Cover:
    pieces: tuple[CompletePiece, ...]
    polygon_id: str = ""

    def count(self) -> int:
        return len(self.pieces)

    def geometries(self) -> list[Region]:
        return [pc.geometry for pc in self.pieces]


@dataclass(frozen=True)
class CoverReport:
    covered: bool
    residue: tuple[Region, ...]
    piece_problems: tuple[str, ...]
    piece_count: int

    @property
    def valid(self) -> bool:
        return self.covered and not self.piece_problems


def validate_cover(p: Region, c: Cover) -> CoverReport:
    """Exact check: every piece is a genuine complete piece of p and their
    union equals p."""
    problems = []
    for i, piece in enumerate(c.pieces):
        comps = components_of(p, piece.square)
        if not 0 <= piece.component_index < len(comps):
            problems.append("piece %d: component index %d out of range" % (i, piece.component_index))
            continue
        if comps[piece.component_index] != piece.geometry:
            problems.append("piece %d: cached geometry is stale" % i)
        if not piece.fits_unit_square():
            problems.append("piece %d: exceeds its unit square" % i)
    ok, residue = covers(p, c.geometries())
    return CoverReport(ok, tuple(residue), tuple(problems), len(c.pieces))


def _grid_range(lo: Fraction, hi: Fraction) -> range:
    return range(math.floor(lo), math.ceil(hi))


def grid_cells(p: Region) -> list[tuple[int, int]]:
    """Integer grid cells whose intersection with p has positive area."""
    x1, y1, x2, y2 = p.bbox()
    out = []
    for i in _grid_range(x1, x2):
        for j in _grid_range(y1, y2):
            if clip_to_square(p, (Fraction(i), Fraction(j))):
                out.append((i, j))
    return out


def grid_cell_count(p: Region) -> int:
    return len(grid_cells(p))


def grid_initial_cover(p: Region) -> Cover:
    """Cover by the components of p's interior within each integer grid cell."""
    pieces = []
    for i, j in grid_cells(p):
        sq = square_from_lower_left(i, j)
        for idx, geom in enumerate(components_of(p, sq)):
            pieces.append(CompletePiece(sq, idx, geom))
    return Cover(tuple(pieces))
