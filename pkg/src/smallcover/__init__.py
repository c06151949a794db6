"""Exact solvers for covering and partitioning polygons with unit-square pieces."""

from .geometry import Region, box, pt, rat, region, validate_region, point_in
from .arrangement import boolean, clip_to_square, covers, overlay

__all__ = [
    "Region", "box", "pt", "rat", "region", "validate_region", "point_in",
    "boolean", "clip_to_square", "covers", "overlay",
]
