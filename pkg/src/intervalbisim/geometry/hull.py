"""Convex hulls of unions of class polytopes."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import msgspec

from ..errors import BlockMismatch
from ..partition import BlockId
from ..types import Point
from .lp import in_convex_hull
from .polytope import ClassDistribution, ClassPolytope, vertices


class HullFamily(msgspec.Struct, frozen=True):
    """
    The polytopes whose union spans ``CH(s, R)``.

    Members share one block list. The hull itself is never materialised as
    facets; membership questions go through the members' vertices.
    """

    members: tuple[ClassPolytope, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("a hull family needs at least one member")
        blocks = self.members[0].blocks
        if any(m.blocks != blocks for m in self.members):
            raise BlockMismatch("hull family members use different block lists")

    @classmethod
    def of(cls, members: Iterable[ClassPolytope]) -> HullFamily:
        return cls(tuple(members))

    @property
    def blocks(self) -> tuple[BlockId, ...]:
        return self.members[0].blocks

    def points(self) -> tuple[ClassDistribution, ...]:
        """All member vertices, deduplicated and sorted."""
        return tuple(sorted({v for m in self.members for v in vertices(m)}))


def member_of_hull(point: Sequence[Fraction], family: HullFamily) -> bool:
    """
    Whether ``point`` is a convex combination of the members' vertices.

    Raises:
        BlockMismatch: If ``point`` has the wrong dimension.
    """
    if len(point) != len(family.blocks):
        raise BlockMismatch(
            f"point of dimension {len(point)} against {len(family.blocks)} blocks"
        )
    return in_convex_hull(point, family.points())


def hull_equal(first: HullFamily, second: HullFamily) -> bool:
    """Mutual vertex membership of ``conv(U first)`` and ``conv(U second)``."""
    if first.blocks != second.blocks:
        raise BlockMismatch("hull families over different block lists")
    first_points = first.points()
    second_points = second.points()
    if first_points == second_points:
        return True
    return all(in_convex_hull(v, second_points) for v in first_points) and all(
        in_convex_hull(v, first_points) for v in second_points
    )


def extreme_points(points: Iterable[Point]) -> tuple[Point, ...]:
    """
    The vertices of the convex hull of ``points``, sorted.

    Points are distributions, so they lie on ``sum(x) = 1``; one varying
    coordinate is dropped before the hull is taken. Hulls of dimension one
    and two are computed directly, higher ones by one exact LP per point.
    """
    unique = sorted(set(points))
    if len(unique) <= 2:
        return tuple(unique)

    width = len(unique[0])
    varying = [k for k in range(width) if len({p[k] for p in unique}) > 1]
    # Coordinates of the affine span, minus the one fixed by the sum.
    axes = varying[:-1]

    if len(axes) <= 1:
        return (unique[0], unique[-1])
    if len(axes) == 2:
        projected = {(p[axes[0]], p[axes[1]]): p for p in unique}
        return tuple(sorted(projected[q] for q in _planar_hull(list(projected))))

    kept = []
    for i, p in enumerate(unique):
        rest = unique[:i] + unique[i + 1 :]
        if not in_convex_hull(p, rest):
            kept.append(p)
    return tuple(kept)


_Planar = tuple[Fraction, Fraction]


def _cross(o: _Planar, a: _Planar, b: _Planar) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _planar_hull(
    points: list[tuple[Fraction, Fraction]],
) -> list[tuple[Fraction, Fraction]]:
    """Andrew's monotone chain; collinear boundary points are dropped."""
    pts = sorted(points)
    if len(pts) <= 2:
        return pts

    lower: list[tuple[Fraction, Fraction]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[Fraction, Fraction]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]
