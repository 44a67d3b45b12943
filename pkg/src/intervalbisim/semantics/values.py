"""
Robust bounded value iteration.

Each step lets the scheduler pick an action and nature pick a feasible
distribution of that action's intervals, both extremising the expected
value of the previous step. Nature's choice is re-made at every step.
"""

from __future__ import annotations

from fractions import Fraction
from typing import AbstractSet, Callable, Mapping

from ..log import create_logger
from ..model.imdp import IMDP, Row
from ..types import ONE, ZERO, State
from ..utils.functions import parallel_map
from .formulas import Extremum, QuantifierMode

logger = create_logger(__name__)

ValueVector = dict[State, Fraction]


def inner_optimum(row: Row, values: Mapping[State, Fraction], extremum: Extremum) -> Fraction:
    """
    Extremises ``sum_t x(t) * values[t]`` over the distributions ``x`` the
    intervals of ``row`` admit.

    Every target starts at its lower bound; the remaining mass is handed to
    targets in order of decreasing (``max``) or increasing (``min``) value,
    each up to its upper bound. The result is a vertex of the feasible set.
    """
    order = sorted(row, key=lambda t: values[t], reverse=extremum == "max")
    budget = ONE - sum((row[t].lo for t in row), ZERO)
    total = ZERO
    for t in order:
        interval = row[t]
        extra = min(budget, interval.width)
        budget -= extra
        total += (interval.lo + extra) * values[t]
    return total


def _pick(extremum: Extremum) -> Callable[[list[Fraction]], Fraction]:
    return max if extremum == "max" else min


def _state_value(
    model: IMDP, state: State, values: Mapping[State, Fraction], mode: QuantifierMode
) -> Fraction:
    return _pick(mode.scheduler)(
        [
            inner_optimum(model.row(state, a), values, mode.nature)
            for a in model.enabled_actions(state)
        ]
    )


def _step(
    model: IMDP,
    values: ValueVector,
    mode: QuantifierMode,
    active: AbstractSet[State],
    jobs: int,
) -> ValueVector:
    updates = parallel_map(
        lambda s: _state_value(model, s, values, mode),
        [s for s in model.states if s in active],
        jobs=jobs,
    )
    result = dict(values)
    result.update(zip((s for s in model.states if s in active), updates))
    return result


def indicator(model: IMDP, states: AbstractSet[State]) -> ValueVector:
    return {s: ONE if s in states else ZERO for s in model.states}


def extremal_bounded_until(
    model: IMDP,
    left: AbstractSet[State],
    right: AbstractSet[State],
    horizon: int,
    mode: QuantifierMode,
    *,
    jobs: int = 1,
) -> ValueVector:
    """
    The ``mode``-extremal probability of ``left U<=horizon right``.

    States in ``right`` stay at 1, states outside ``left`` and ``right`` at
    0; the others are updated ``horizon`` times.
    """
    if horizon < 0:
        raise ValueError(f"negative horizon {horizon}")
    values = indicator(model, right)
    active = {s for s in model.states if s in left and s not in right}
    for step in range(1, horizon + 1):
        values = _step(model, values, mode, active, jobs)
        logger.debug("bounded until, %s: step %d of %d", mode.value, step, horizon)
    return values


def extremal_next(
    model: IMDP, target: AbstractSet[State], mode: QuantifierMode, *, jobs: int = 1
) -> ValueVector:
    """The ``mode``-extremal probability of moving into ``target`` in one step."""
    return _step(model, indicator(model, target), mode, set(model.states), jobs)
