"""
Class polytopes and their vertices.

A class polytope lifts the interval row of an enabled action to the blocks
of a partition: the probability of block ``C`` ranges over the sum of the
lower bounds of its states up to the (capped) sum of the upper bounds. Its
H-form is ``{x : sum(x) = 1, lo_C <= x(C) <= hi_C}``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence, TypeAlias

import msgspec

from ..errors import BlockMismatch, DisabledAction, EmptyPolytope
from ..model.imdp import IMDP
from ..model.interval import Interval
from ..partition import BlockId, Partition
from ..types import ONE, ZERO, Action, Point, State
from ..utils.decorators import pure

# Probabilities over the block list of the polytope it belongs to.
ClassDistribution: TypeAlias = Point
# Mixing weights over an ordered list of constituents.
WeightVector: TypeAlias = tuple[Fraction, ...]


class ClassPolytope(msgspec.Struct, frozen=True):
    """
    ``H(s, a, R)`` over an ordered block list.

    ``bounds[i]`` constrains the probability of ``blocks[i]``. Blocks bounded
    by ``[0, 0]`` are kept so that polytopes of one partition share their
    block list; vertex enumeration treats them as constants.
    """

    blocks: tuple[BlockId, ...]
    bounds: tuple[Interval, ...]

    @property
    def support(self) -> tuple[int, ...]:
        """Positions whose upper bound is positive."""
        return tuple(i for i, b in enumerate(self.bounds) if b.hi > ZERO)

    @property
    def is_feasible(self) -> bool:
        low = sum((b.lo for b in self.bounds), ZERO)
        high = sum((b.hi for b in self.bounds), ZERO)
        return low <= ONE <= high

    def vertices(self) -> tuple[ClassDistribution, ...]:
        return vertices(self)

    def contains(self, point: Sequence[Fraction]) -> bool:
        if len(point) != len(self.blocks):
            raise BlockMismatch(
                f"point of dimension {len(point)} against {len(self.blocks)} blocks"
            )
        return sum(point, ZERO) == ONE and all(
            b.contains(x) for b, x in zip(self.bounds, point)
        )

    def extent(self, position: int) -> Interval:
        """The range of ``x(blocks[position])`` over the polytope."""
        values = [v[position] for v in vertices(self)]
        return Interval(min(values), max(values))

    def dump(self) -> str:
        """``block:[lo,hi]`` lines."""
        return "".join(f"{c}:{b}\n" for c, b in zip(self.blocks, self.bounds))


def class_polytope(
    model: IMDP, state: State, action: Action, partition: Partition
) -> ClassPolytope:
    """
    Lifts the row of ``(state, action)`` to the blocks of ``partition``.

    Raises:
        DisabledAction: If ``action`` is not enabled in ``state``.
    """
    if not model.is_enabled(state, action):
        raise DisabledAction(state, action)

    low = [ZERO] * len(partition)
    high = [ZERO] * len(partition)
    for target, interval in model.row(state, action).items():
        block = partition.block_of[target]
        low[block] += interval.lo
        high[block] += interval.hi
    return ClassPolytope(
        blocks=tuple(range(len(partition))),
        bounds=tuple(Interval(min(ONE, lo), min(ONE, hi)) for lo, hi in zip(low, high)),
    )


@pure(cached=True, maxsize=65536)
def vertices(polytope: ClassPolytope) -> tuple[ClassDistribution, ...]:
    """
    The vertex set of ``polytope``, deduplicated and sorted.

    A vertex of a box cut by the hyperplane ``sum(x) = 1`` has all but at most
    one free coordinate at a bound. Each free block in turn takes the residual
    while every other free block sits at ``lo`` or ``hi``; fixed blocks
    (``lo == hi``) are constants. At most ``k * 2**(k - 1)`` candidates arise
    for ``k`` free blocks.

    Raises:
        EmptyPolytope: If the bounds admit no distribution.
    """
    if not polytope.is_feasible:
        raise EmptyPolytope(f"bounds admit no distribution: {polytope.dump()!r}")

    bounds = polytope.bounds
    free = [i for i, b in enumerate(bounds) if b.lo != b.hi]
    base = [b.lo for b in bounds]
    residual = ONE - sum((base[i] for i in range(len(bounds)) if i not in free), ZERO)

    if not free:
        return (tuple(base),)

    found: set[ClassDistribution] = set()
    for slack in free:
        others = [i for i in free if i != slack]
        for corner in itertools.product((0, 1), repeat=len(others)):
            point = list(base)
            used = ZERO
            for i, side in zip(others, corner):
                point[i] = bounds[i].hi if side else bounds[i].lo
                used += point[i]
            value = residual - used
            if bounds[slack].contains(value):
                point[slack] = value
                found.add(tuple(point))
    return tuple(sorted(found))


def canonical_key(polytope: ClassPolytope) -> tuple[ClassDistribution, ...]:
    """Identity of the point set: two polytopes are equal iff their keys are."""
    return vertices(polytope)


def distinct(polytopes: Iterable[ClassPolytope]) -> tuple[ClassPolytope, ...]:
    """Drops geometric duplicates, keeping the first representative in canonical order."""
    seen: dict[tuple[ClassDistribution, ...], ClassPolytope] = {}
    for p in polytopes:
        seen.setdefault(canonical_key(p), p)
    return tuple(seen[k] for k in sorted(seen))


def combination_point(
    rho: WeightVector, corners: Sequence[ClassDistribution]
) -> ClassDistribution:
    """The mixture ``sum_i rho_i * corners_i``."""
    if len(rho) != len(corners):
        raise ValueError(f"{len(rho)} weights for {len(corners)} corners")
    if not corners:
        raise ValueError("no corner to combine")
    width = len(corners[0])
    if any(len(c) != width for c in corners):
        raise BlockMismatch("corners over different block lists")
    return tuple(
        sum((w * c[k] for w, c in zip(rho, corners)), ZERO) for k in range(width)
    )


def corner_combinations(
    polytopes: Sequence[ClassPolytope],
) -> Iterable[tuple[ClassDistribution, ...]]:
    """Every choice of one vertex per polytope, lazily."""
    return itertools.product(*(vertices(p) for p in polytopes))


def combination_count(polytopes: Sequence[ClassPolytope]) -> int:
    count = 1
    for p in polytopes:
        count *= len(vertices(p))
    return count


def weight_grid(count: int, denominator: int) -> Iterable[WeightVector]:
    """Every weight vector over ``count`` entries with entries ``k / denominator``."""
    for parts in itertools.product(range(denominator + 1), repeat=count - 1):
        last = denominator - sum(parts)
        if last >= 0:
            yield tuple(Fraction(k, denominator) for k in (*parts, last))
