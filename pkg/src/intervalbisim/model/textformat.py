"""
Line-oriented text format for interval MDPs.

    imdp
    states: l r u
    initial: u
    label l: left
    label r: right
    u a -> l [0.1,0.6], r [0,1]
    u b -> r [0,1], l [0,3/5]
    l loop -> l [1,1]
    r loop -> r [1,1]

``#`` starts a comment. Bounds are decimals or ``num/den`` rationals and are
read exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from ..errors import ParseError
from ..types import Action, Prop, State
from .imdp import IMDP
from .interval import Interval, parse_rational

_TOKEN = re.compile(r"[^\s,\[\]:#]+")


class _Cursor:
    """Scanner over a single line; columns are 1-based."""

    def __init__(self, text: str, line: int) -> None:
        self.text = text
        self.line = line
        self.pos = 0

    @property
    def column(self) -> int:
        return self.pos + 1

    def error(self, message: str, column: Optional[int] = None) -> ParseError:
        return ParseError(self.line, self.column if column is None else column, message)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str) -> None:
        if not self.peek(literal):
            raise self.error(f"expected {literal!r}")
        self.pos += len(literal)

    def token(self, what: str) -> tuple[str, int]:
        self.skip_ws()
        match = _TOKEN.match(self.text, self.pos)
        if not match:
            raise self.error(f"expected {what}")
        self.pos = match.end()
        return match.group(), match.start() + 1

    def bound(self, stop: str) -> tuple[Fraction, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in stop:
            self.pos += 1
        literal = self.text[start : self.pos].strip()
        try:
            return parse_rational(literal), start + 1
        except ValueError as e:
            raise self.error(str(e), start + 1) from e


class _ModelBuilder:
    def __init__(self) -> None:
        self.states: Optional[list[State]] = None
        self._known: frozenset[State] = frozenset()
        self.initial: Optional[State] = None
        self.labels: dict[State, set[Prop]] = {}
        self.transitions: dict[tuple[State, Action], dict[State, Interval]] = {}

    def require_state(self, cursor: _Cursor, name: str, column: int) -> State:
        if self.states is None:
            raise cursor.error("'states:' must be declared before use", column)
        if name not in self._known:
            raise cursor.error(f"unknown state {name!r}", column)
        return name

    def declare_states(self, cursor: _Cursor) -> None:
        if self.states is not None:
            raise cursor.error("duplicate 'states:' line", 1)
        cursor.expect("states")
        cursor.expect(":")
        names: list[State] = []
        while not cursor.at_end():
            name, column = cursor.token("a state name")
            if name in names:
                raise cursor.error(f"state {name!r} declared twice", column)
            names.append(name)
        if not names:
            raise cursor.error("'states:' declares no state")
        self.states = names
        self._known = frozenset(names)

    def declare_initial(self, cursor: _Cursor) -> None:
        if self.initial is not None:
            raise cursor.error("duplicate 'initial:' line", 1)
        cursor.expect("initial")
        cursor.expect(":")
        name, column = cursor.token("a state name")
        self.initial = self.require_state(cursor, name, column)
        if not cursor.at_end():
            raise cursor.error("trailing text after the initial state")

    def declare_label(self, cursor: _Cursor) -> None:
        cursor.expect("label")
        name, column = cursor.token("a state name")
        state = self.require_state(cursor, name, column)
        if state in self.labels:
            raise cursor.error(f"duplicate label line for {state!r}", column)
        cursor.expect(":")
        props: set[Prop] = set()
        while not cursor.at_end():
            prop, _ = cursor.token("a proposition")
            props.add(prop)
        self.labels[state] = props

    def declare_transition(self, cursor: _Cursor) -> None:
        name, column = cursor.token("a state name")
        source = self.require_state(cursor, name, column)
        action, action_column = cursor.token("an action name")
        if (source, action) in self.transitions:
            raise cursor.error(
                f"duplicate transition line for ({source}, {action})", action_column
            )
        cursor.expect("->")

        row: dict[State, Interval] = {}
        while True:
            name, column = cursor.token("a target state")
            target = self.require_state(cursor, name, column)
            if target in row:
                raise cursor.error(
                    f"duplicate triple ({source}, {action}, {target})", column
                )
            cursor.expect("[")
            lo, lo_column = cursor.bound(",]")
            cursor.expect(",")
            hi, _ = cursor.bound("]")
            cursor.expect("]")
            if lo > hi:
                raise cursor.error("empty interval", lo_column)
            interval = Interval(lo, hi)
            if not interval.is_well_formed:
                raise cursor.error("interval outside [0,1]", lo_column)
            row[target] = interval
            if cursor.at_end():
                break
            cursor.expect(",")
        self.transitions[(source, action)] = row

    def finish(self) -> IMDP:
        return IMDP.build(
            states=self.states or (),
            transitions=self.transitions,
            labels=self.labels,
            initial=self.initial,
        )


def parse(text: str) -> IMDP:
    """
    Reads a model from its text form.

    Raises:
        ParseError: With the line and column of the first defect.
    """
    builder = _ModelBuilder()
    seen_header = False
    last_line = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        cursor = _Cursor(content, number)
        if not seen_header:
            cursor.expect("imdp")
            if not cursor.at_end():
                raise cursor.error("trailing text after 'imdp'")
            seen_header = True
            continue

        if _is_keyword(content, "states"):
            builder.declare_states(cursor)
        elif _is_keyword(content, "initial"):
            builder.declare_initial(cursor)
        elif content.split(None, 1)[0] == "label" and "->" not in content:
            builder.declare_label(cursor)
        else:
            builder.declare_transition(cursor)

    if not seen_header:
        raise ParseError(max(last_line, 1), 1, "missing 'imdp' header")
    if builder.states is None:
        raise ParseError(max(last_line, 1), 1, "missing 'states:' line")
    return builder.finish()


def _is_keyword(content: str, keyword: str) -> bool:
    return re.match(rf"\s*{keyword}\s*:", content) is not None


def serialize(model: IMDP) -> str:
    """Canonical text form: states, then actions, in lexicographic order."""
    lines = ["imdp", "states: " + " ".join(model.states)]
    if model.initial is not None:
        lines.append(f"initial: {model.initial}")
    for state in model.states:
        props = model.label(state)
        if props:
            lines.append(f"label {state}: " + " ".join(sorted(props)))
    for (state, action), row in sorted(model.transitions.items()):
        if not row:
            continue
        targets = ", ".join(f"{t} {row[t]}" for t in sorted(row))
        lines.append(f"{state} {action} -> {targets}")
    return "\n".join(lines) + "\n"
