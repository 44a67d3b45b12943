"""
Brute-force bisimulation for small models.

Every partition refining the label partition is enumerated, coarsest first,
and the first one under which all blocks are stable is returned. Stability is
checked without the refinement engines' signatures: segment-shaped hulls are
compared by interval arithmetic on the bounds, containment of mixtures of
segments by enumerating the candidate mixtures exactly, and everything else
through vertex membership LPs, a rho-grid search and, for minimality, one
LP with a row pair for every combination of corners.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from ..config import Settings
from ..errors import InvariantBreach, OracleBoundExceeded
from ..geometry.hull import HullFamily, hull_equal
from ..geometry.lp import Constraint, Sense, feasible_point
from ..geometry.minimal import mixture_contained
from ..geometry.polytope import (
    ClassPolytope,
    canonical_key,
    combination_count,
    corner_combinations,
    distinct,
    vertices,
    weight_grid,
)
from ..log import create_logger
from ..model.imdp import IMDP
from ..model.interval import Interval
from ..partition import Partition
from ..types import ONE, ZERO, BisimKind, State
from .refinement import initial_partition

logger = create_logger(__name__)

_Segment = tuple[Fraction, Fraction]


def _set_partitions(items: Sequence[State]) -> Iterator[list[list[State]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        yield [[first], *smaller]
        for i in range(len(smaller)):
            yield [*smaller[:i], [first, *smaller[i]], *smaller[i + 1 :]]


def candidate_partitions(model: IMDP) -> list[Partition]:
    """All refinements of the label partition, fewest blocks first."""
    per_label = [list(_set_partitions(list(b))) for b in initial_partition(model).blocks]
    candidates = [
        Partition.from_blocks(block for choice in combo for block in choice)
        for combo in itertools.product(*per_label)
    ]
    return sorted(candidates, key=lambda p: (len(p), p.blocks))


def _polytopes(model: IMDP, state: State, partition: Partition) -> list[ClassPolytope]:
    polytopes = []
    for action in model.enabled_actions(state):
        low = [ZERO] * len(partition)
        high = [ZERO] * len(partition)
        for target, interval in model.row(state, action).items():
            low[partition.block_of[target]] += interval.lo
            high[partition.block_of[target]] += interval.hi
        polytopes.append(
            ClassPolytope(
                blocks=tuple(range(len(partition))),
                bounds=tuple(
                    Interval(min(ONE, lo), min(ONE, hi)) for lo, hi in zip(low, high)
                ),
            )
        )
    return polytopes


def _segment_axes(polytopes: Sequence[ClassPolytope]) -> Optional[tuple[int, int]]:
    """The two positions carrying all mass, when every polytope is a segment on them."""
    used = sorted({i for p in polytopes for i in p.support})
    if len(used) > 2:
        return None
    if len(used) == 1:
        return (used[0], used[0])
    return (used[0], used[1])


def _segment(polytope: ClassPolytope, axes: tuple[int, int]) -> _Segment:
    """The range of the first axis, from the bounds alone."""
    a, b = axes
    if a == b:
        return (ONE, ONE)
    first, second = polytope.bounds[a], polytope.bounds[b]
    return (max(first.lo, ONE - second.hi), min(first.hi, ONE - second.lo))


def _same_hull(first: list[ClassPolytope], second: list[ClassPolytope]) -> bool:
    axes = _segment_axes(first + second)
    if axes is not None:
        left = [_segment(p, axes) for p in first]
        right = [_segment(p, axes) for p in second]
        return (min(lo for lo, _ in left), max(hi for _, hi in left)) == (
            min(lo for lo, _ in right),
            max(hi for _, hi in right),
        )

    # Hulls with different coordinate ranges cannot be equal.
    for position in range(len(first[0].blocks)):
        left_range = _coordinate_range(first, position)
        if left_range != _coordinate_range(second, position):
            return False
    return hull_equal(HullFamily.of(first), HullFamily.of(second))


def _coordinate_range(
    polytopes: Sequence[ClassPolytope], position: int
) -> tuple[Fraction, Fraction]:
    values = [v[position] for p in polytopes for v in vertices(p)]
    return (min(values), max(values))


def _segments_contain(target: _Segment, others: Sequence[_Segment]) -> bool:
    """
    Whether some mixture of the segments ``others`` lies inside ``target``.

    A mixture of segments is the segment of mixed endpoints. The feasible
    weights form a polytope whose vertices mix at most three segments, so
    single segments, pairs and triples are tried exactly.
    """
    lo, hi = target

    def inside(point_lo: Fraction, point_hi: Fraction) -> bool:
        return lo <= point_lo and point_hi <= hi

    for a in others:
        if inside(*a):
            return True
    for a, b in itertools.combinations(others, 2):
        # lam * a + (1 - lam) * b, lam in [0, 1]
        window = [ZERO, ONE]
        for coefficient, offset, bound, lower in (
            (a[0] - b[0], b[0], lo, True),
            (a[1] - b[1], b[1], hi, False),
        ):
            # lower: coefficient * lam + offset >= bound, else <= bound
            if coefficient == 0:
                ok = offset >= bound if lower else offset <= bound
                if not ok:
                    window = [ONE, ZERO]
                continue
            edge = (bound - offset) / coefficient
            if (coefficient > 0) == lower:
                window[0] = max(window[0], edge)
            else:
                window[1] = min(window[1], edge)
        if window[0] <= window[1]:
            return True
    for a, b, c in itertools.combinations(others, 3):
        weights = _solve_three(a, b, c, lo, hi)
        if weights is not None and all(w >= 0 for w in weights):
            return True
    return False


def _solve_three(
    a: _Segment, b: _Segment, c: _Segment, lo: Fraction, hi: Fraction
) -> Optional[tuple[Fraction, ...]]:
    """Weights with both mixture endpoints on the target's endpoints, by Cramer's rule."""
    matrix = [
        [ONE, ONE, ONE],
        [a[0], b[0], c[0]],
        [a[1], b[1], c[1]],
    ]
    rhs = [ONE, lo, hi]

    def det(m: list[list[Fraction]]) -> Fraction:
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    d = det(matrix)
    if d == 0:
        return None
    weights = []
    for column in range(3):
        replaced = [
            [rhs[r] if k == column else matrix[r][k] for k in range(3)] for r in range(3)
        ]
        weights.append(det(replaced) / d)
    return tuple(weights)


def _is_minimal(
    target: ClassPolytope, remaining: Sequence[ClassPolytope], settings: Settings
) -> bool:
    if not remaining:
        return True
    axes = _segment_axes([target, *remaining])
    if axes is not None:
        return not _segments_contain(
            _segment(target, axes), [_segment(p, axes) for p in remaining]
        )

    combinations = combination_count(remaining)
    if combinations > settings.combination_cap:
        raise OracleBoundExceeded(
            f"{combinations} corner combinations exceed the cap of {settings.combination_cap}"
        )
    for rho in weight_grid(len(remaining), settings.grid_denominator):
        if mixture_contained(rho, remaining, target):
            return False
    return _corner_program(target, remaining) is None


def _corner_program(
    target: ClassPolytope, remaining: Sequence[ClassPolytope]
) -> Optional[tuple[Fraction, ...]]:
    """
    Weights whose mixture of ``remaining`` lies inside ``target``, or ``None``.

    A mixture of polytopes is contained in the box of ``target`` exactly when
    every mixture of one corner per polytope is, so each corner combination
    contributes its own pair of rows per block.
    """
    n = len(remaining)
    rows: set[tuple[tuple[Fraction, ...], Sense, Fraction]] = set()
    for combo in corner_combinations(remaining):
        for k, bound in enumerate(target.bounds):
            coefficients = tuple(corner[k] for corner in combo)
            rows.add((coefficients, ">=", bound.lo))
            rows.add((coefficients, "<=", bound.hi))
    constraints = [Constraint.of([ONE] * n, "=", ONE)]
    constraints.extend(Constraint.of(c, sense, rhs) for c, sense, rhs in sorted(rows))
    return feasible_point(n, constraints)


def _minimal_set(
    polytopes: list[ClassPolytope], settings: Settings
) -> frozenset[tuple[tuple[Fraction, ...], ...]]:
    unique = distinct(polytopes)
    return frozenset(
        canonical_key(p)
        for p in unique
        if _is_minimal(
            p, [q for q in unique if canonical_key(q) != canonical_key(p)], settings
        )
    )


def is_stable(
    model: IMDP,
    partition: Partition,
    kind: BisimKind,
    settings: Optional[Settings] = None,
) -> bool:
    """Whether no two states of one block violate the ``kind`` condition."""
    settings = settings or Settings()
    for block in partition.blocks:
        if len(block) == 1:
            continue
        polytopes = {s: _polytopes(model, s, partition) for s in block}
        head = block[0]
        if kind is BisimKind.COOPERATIVE:
            if not all(_same_hull(polytopes[head], polytopes[t]) for t in block[1:]):
                return False
        else:
            reference = _minimal_set(polytopes[head], settings)
            if any(_minimal_set(polytopes[t], settings) != reference for t in block[1:]):
                return False
    return True


def brute_force_bisimulation(
    model: IMDP, kind: BisimKind, settings: Optional[Settings] = None
) -> Partition:
    """
    The coarsest stable partition found by enumeration.

    Raises:
        OracleBoundExceeded: If the model has more states than
            ``settings.oracle_bound``.
    """
    settings = settings or Settings()
    if len(model.states) > settings.oracle_bound:
        raise OracleBoundExceeded(
            f"{len(model.states)} states exceed the oracle bound of {settings.oracle_bound}"
        )
    candidates = candidate_partitions(model)
    for checked, partition in enumerate(candidates, start=1):
        if is_stable(model, partition, kind, settings):
            logger.debug(
                "oracle: stable partition after %d of %d candidates",
                checked,
                len(candidates),
            )
            return partition
    raise InvariantBreach("no candidate partition is stable")
