"""Binary parallel composition with synchronisation on point-valued actions."""

from __future__ import annotations

from collections import deque
from typing import AbstractSet

from ..errors import SyncUncertainty
from ..log import create_logger
from ..types import Action, State
from .imdp import IMDP, Row
from .interval import Interval

logger = create_logger(__name__)

IDLE_ACTION: Action = "tau"


def product_state(s1: State, s2: State) -> State:
    return f"{s1}|{s2}"


def _check_sync(component: int, model: IMDP, action: Action) -> None:
    for s in model.states:
        if not model.is_enabled(s, action):
            continue
        if any(not i.is_point for i in model.row(s, action).values()):
            raise SyncUncertainty(component, s, action)


def _enabled_somewhere(model: IMDP, action: Action) -> bool:
    return any(model.is_enabled(s, action) for s in model.states)


def compose(first: IMDP, second: IMDP, sync: AbstractSet[Action]) -> IMDP:
    """
    The reachable product of ``first`` and ``second``.

    Actions outside ``sync`` interleave while the other component stays put;
    an interleaved action known to both components is renamed ``a@1`` or
    ``a@2``. A synchronised action fires when both components enable it and
    moves them with the product of their point distributions. A product state
    without any move gets a ``tau`` self-loop.

    Raises:
        SyncUncertainty: If a synchronised action enabled in both components
            has a non-point interval in either.
    """
    for action in sorted(sync):
        if _enabled_somewhere(first, action) and _enabled_somewhere(second, action):
            _check_sync(1, first, action)
            _check_sync(2, second, action)

    shared = (set(first.actions) & set(second.actions)) - set(sync)

    def local_name(action: Action, component: int) -> Action:
        return f"{action}@{component}" if action in shared else action

    start = (
        first.initial if first.initial is not None else first.states[0],
        second.initial if second.initial is not None else second.states[0],
    )

    transitions: dict[tuple[State, Action], Row] = {}
    labels: dict[State, frozenset[str]] = {}
    seen = {start}
    queue = deque([start])

    def visit(pair: tuple[State, State]) -> State:
        if pair not in seen:
            seen.add(pair)
            queue.append(pair)
        return product_state(*pair)

    while queue:
        s1, s2 = queue.popleft()
        here = product_state(s1, s2)
        labels[here] = first.label(s1) | second.label(s2)
        moves: dict[Action, Row] = {}

        for action in first.enabled_actions(s1):
            if action in sync:
                continue
            moves[local_name(action, 1)] = {
                visit((t1, s2)): i for t1, i in first.row(s1, action).items()
            }
        for action in second.enabled_actions(s2):
            if action in sync:
                continue
            moves[local_name(action, 2)] = {
                visit((s1, t2)): i for t2, i in second.row(s2, action).items()
            }
        for action in sorted(sync):
            if not (first.is_enabled(s1, action) and second.is_enabled(s2, action)):
                continue
            row: Row = {}
            for t1, i1 in first.row(s1, action).items():
                for t2, i2 in second.row(s2, action).items():
                    p = i1.lo * i2.lo
                    if p:
                        row[visit((t1, t2))] = Interval(p, p)
            moves[action] = row

        if not moves:
            moves[IDLE_ACTION] = {here: Interval.point(1)}
        for action, row in moves.items():
            transitions[(here, action)] = row

    logger.debug("composed %d reachable product states", len(labels))
    return IMDP.build(
        states=labels,
        transitions=transitions,
        labels=labels,
        initial=product_state(*start),
    )
