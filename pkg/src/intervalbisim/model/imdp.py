"""The interval MDP data model, its validation and its size metrics."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Literal, Mapping, Optional

import msgspec

from ..types import ONE, Action, Prop, State
from .interval import ZERO_INTERVAL, Interval

Row = dict[State, Interval]


class IMDP(msgspec.Struct, frozen=True):
    """
    An interval MDP ``(S, A, AP, L, I)``.

    States and actions are kept in lexicographic order. ``transitions`` is
    sparse: a triple ``(s, a, t)`` missing from it denotes ``[0, 0]``.
    ``enabled`` lists, per state, the actions with at least one declared
    target. Build instances with ``IMDP.build``.
    """

    states: tuple[State, ...]
    actions: tuple[Action, ...]
    labels: dict[State, frozenset[Prop]]
    transitions: dict[tuple[State, Action], Row]
    enabled: dict[State, tuple[Action, ...]]
    initial: Optional[State] = None

    @classmethod
    def build(
        cls,
        states: Iterable[State],
        transitions: Mapping[tuple[State, Action], Mapping[State, Interval]],
        labels: Optional[Mapping[State, Iterable[Prop]]] = None,
        initial: Optional[State] = None,
    ) -> IMDP:
        ordered_states = tuple(sorted(set(states)))
        rows: dict[tuple[State, Action], Row] = {}
        for key in sorted(transitions):
            # A row without targets declares nothing.
            if transitions[key]:
                rows[key] = {t: transitions[key][t] for t in sorted(transitions[key])}

        enabled: dict[State, list[Action]] = {s: [] for s in ordered_states}
        for s, a in rows:
            enabled.setdefault(s, []).append(a)

        labels = labels or {}
        return cls(
            states=ordered_states,
            actions=tuple(sorted({a for _, a in rows})),
            labels={
                s: frozenset(labels.get(s, ()))
                for s in sorted(set(ordered_states) | set(labels))
            },
            transitions=rows,
            enabled={s: tuple(sorted(acts)) for s, acts in enabled.items()},
            initial=initial,
        )

    @property
    def props(self) -> frozenset[Prop]:
        return frozenset().union(*self.labels.values())

    def label(self, state: State) -> frozenset[Prop]:
        return self.labels.get(state, frozenset())

    def enabled_actions(self, state: State) -> tuple[Action, ...]:
        return self.enabled.get(state, ())

    def is_enabled(self, state: State, action: Action) -> bool:
        return action in self.enabled.get(state, ())

    def row(self, state: State, action: Action) -> Row:
        return self.transitions.get((state, action), {})

    def interval(self, state: State, action: Action, target: State) -> Interval:
        return self.row(state, action).get(target, ZERO_INTERVAL)

    def states_with(self, prop: Prop) -> frozenset[State]:
        return frozenset(s for s in self.states if prop in self.label(s))


class Violation(msgspec.Struct, frozen=True):
    kind: Literal[
        "no-states",
        "unknown-state",
        "malformed-interval",
        "infeasible",
        "no-enabled-action",
    ]
    message: str
    state: Optional[State] = None
    action: Optional[Action] = None
    target: Optional[State] = None

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


class ValidationReport(msgspec.Struct, frozen=True):
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        if self.ok:
            return "valid\n"
        return "".join(f"{v}\n" for v in self.violations)


def validate(model: IMDP) -> ValidationReport:
    """Lists every defect that makes a downstream operation undefined."""
    found: list[Violation] = []
    known = set(model.states)

    if not model.states:
        found.append(Violation("no-states", "the model declares no state"))

    if model.initial is not None and model.initial not in known:
        found.append(
            Violation(
                "unknown-state",
                f"initial state {model.initial!r} is not declared",
                state=model.initial,
            )
        )

    for s in model.labels:
        if s not in known:
            found.append(
                Violation("unknown-state", f"label of undeclared state {s!r}", state=s)
            )

    for (s, a), row in model.transitions.items():
        if s not in known:
            found.append(
                Violation(
                    "unknown-state", f"transition from undeclared state {s!r}", s, a
                )
            )
        for t, interval in row.items():
            if t not in known:
                found.append(
                    Violation(
                        "unknown-state",
                        f"{s} {a} -> undeclared target {t!r}",
                        s,
                        a,
                        t,
                    )
                )
            if not interval.is_well_formed:
                found.append(
                    Violation(
                        "malformed-interval",
                        f"{s} {a} -> {t} {interval} is not a subinterval of [0,1]",
                        s,
                        a,
                        t,
                    )
                )
        if not row:
            continue
        low = sum((i.lo for i in row.values()), Fraction(0))
        high = sum((i.hi for i in row.values()), Fraction(0))
        if low > ONE or high < ONE:
            found.append(
                Violation(
                    "infeasible",
                    f"{s} {a}: lower bounds sum to {low}, upper bounds to {high}",
                    s,
                    a,
                )
            )

    for s in model.states:
        if not model.enabled_actions(s):
            found.append(
                Violation("no-enabled-action", f"state {s!r} enables no action", s)
            )

    return ValidationReport(tuple(found))


class ModelMetrics(msgspec.Struct, frozen=True):
    state_count: int
    transition_count: int
    max_fanout: int
    max_distinct_actions: int


def _support(row: Row) -> frozenset[tuple[State, Interval]]:
    return frozenset((t, i) for t, i in row.items() if not i.is_zero)


def metrics(model: IMDP) -> ModelMetrics:
    """
    Counts states, enabled (state, action) pairs, the maximal support ``f``
    of an action and the maximal number ``b`` of distinct rows of a state.
    """
    fanout = 0
    distinct = 0
    pairs = 0
    for s in model.states:
        rows = {_support(model.row(s, a)) for a in model.enabled_actions(s)}
        pairs += len(model.enabled_actions(s))
        distinct = max(distinct, len(rows))
        fanout = max([fanout, *(len(r) for r in rows)])
    return ModelMetrics(
        state_count=len(model.states),
        transition_count=pairs,
        max_fanout=fanout,
        max_distinct_actions=distinct,
    )
