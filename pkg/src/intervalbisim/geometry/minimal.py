"""
Strict minimality of class polytopes.

A polytope ``H(s, a, R)`` is strictly minimal when no mixture
``sum_i rho_i * H_i`` of the state's remaining distinct polytopes lies inside
it. The mixture is a weighted Minkowski sum, so its projection on block ``C``
is ``[sum_i rho_i * min H_i(C), sum_i rho_i * max H_i(C)]``. Containment in the
box-shaped ``H(s, a, R)`` is therefore linear in ``rho``, and one exact LP
over the simplex of weights decides it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from ..errors import DisabledAction
from ..model.imdp import IMDP
from ..partition import Partition
from ..types import ONE, Action, State
from .lp import Constraint, feasible_point
from .polytope import (
    ClassPolytope,
    WeightVector,
    canonical_key,
    class_polytope,
    combination_point,
    corner_combinations,
    distinct,
)


def remaining_polytopes(
    target: ClassPolytope, polytopes: Sequence[ClassPolytope]
) -> tuple[ClassPolytope, ...]:
    """The distinct members of ``polytopes`` other than ``target`` itself."""
    key = canonical_key(target)
    return tuple(p for p in distinct(polytopes) if canonical_key(p) != key)


def containing_mixture(
    target: ClassPolytope, remaining: Sequence[ClassPolytope]
) -> Optional[WeightVector]:
    """
    Weights ``rho`` with ``sum_i rho_i * remaining_i`` inside ``target``, if any.

    Rows that hold for every ``rho`` are left out of the program.
    """
    if not remaining:
        return None
    n = len(remaining)
    constraints = [Constraint.of([ONE] * n, "=", ONE)]
    for position, bound in enumerate(target.bounds):
        extents = [p.extent(position) for p in remaining]
        lows = [e.lo for e in extents]
        highs = [e.hi for e in extents]
        if min(lows) < bound.lo:
            constraints.append(Constraint.of(lows, ">=", bound.lo))
        if max(highs) > bound.hi:
            constraints.append(Constraint.of(highs, "<=", bound.hi))
    return feasible_point(n, constraints)


def mixture_contained(
    rho: WeightVector, remaining: Sequence[ClassPolytope], target: ClassPolytope
) -> bool:
    """
    ``H(s, rho, R) ⊆ target`` by checking every corner combination.

    Exponential in ``len(remaining)``; the LP of ``containing_mixture`` is the
    efficient form of the same test.
    """
    return all(
        target.contains(combination_point(rho, corners))
        for corners in corner_combinations(remaining)
    )


def state_polytopes(
    model: IMDP, state: State, partition: Partition
) -> dict[Action, ClassPolytope]:
    return {
        a: class_polytope(model, state, a, partition)
        for a in model.enabled_actions(state)
    }


def strictly_minimal(
    model: IMDP, state: State, action: Action, partition: Partition
) -> bool:
    """
    Whether ``H(state, action, partition)`` contains no mixture of the
    state's other distinct polytopes.

    Raises:
        DisabledAction: If ``action`` is not enabled in ``state``.
    """
    if not model.is_enabled(state, action):
        raise DisabledAction(state, action)
    polytopes = state_polytopes(model, state, partition)
    target = polytopes[action]
    remaining = remaining_polytopes(target, list(polytopes.values()))
    return containing_mixture(target, remaining) is None


def minimal_polytopes(
    polytopes: Sequence[ClassPolytope],
) -> tuple[ClassPolytope, ...]:
    """The strictly minimal members among ``polytopes``, deduplicated."""
    unique = distinct(polytopes)
    return tuple(
        p for p in unique if containing_mixture(p, remaining_polytopes(p, unique)) is None
    )


def minimal_signature(
    polytopes: Sequence[ClassPolytope],
) -> frozenset[tuple[tuple[Fraction, ...], ...]]:
    """Canonical keys of the strictly minimal polytopes."""
    return frozenset(canonical_key(p) for p in minimal_polytopes(polytopes))
