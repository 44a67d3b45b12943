"""Bounded PCTL formulas and the quantifier modes they are evaluated under."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Annotated, Literal, Optional, Union

import msgspec

Extremum = Literal["min", "max"]


class QuantifierMode(enum.StrEnum):
    """
    How scheduler and nature resolve their choices.

    The first half names the scheduler's extremum over actions, the second
    half nature's extremum over feasible distributions.
    """

    MINMIN = "minmin"
    MAXMAX = "maxmax"
    MAXIMIN = "maximin"
    MINIMAX = "minimax"

    @property
    def scheduler(self) -> Extremum:
        return "max" if self in (QuantifierMode.MAXMAX, QuantifierMode.MAXIMIN) else "min"

    @property
    def nature(self) -> Extremum:
        return "max" if self in (QuantifierMode.MAXMAX, QuantifierMode.MINIMAX) else "min"


class Comparison(enum.StrEnum):
    GE = ">="
    GT = ">"
    LE = "<="
    LT = "<"

    @property
    def is_lower_bound(self) -> bool:
        return self in (Comparison.GE, Comparison.GT)

    def holds(self, value: Fraction, threshold: Fraction) -> bool:
        match self:
            case Comparison.GE:
                return value >= threshold
            case Comparison.GT:
                return value > threshold
            case Comparison.LE:
                return value <= threshold
            case Comparison.LT:
                return value < threshold


class Quantifier(enum.StrEnum):
    """Quantification of a threshold over schedulers and natures."""

    FORALL = "forall"  # every scheduler, every nature
    EXISTS = "exists"  # some scheduler, some nature
    SCHED = "sched"  # some scheduler against every nature
    NATURE = "nature"  # some nature against every scheduler

    def mode_for(self, comparison: Comparison) -> QuantifierMode:
        """The extremal value a threshold under this quantifier is decided by."""
        lower = comparison.is_lower_bound
        match self:
            case Quantifier.FORALL:
                return QuantifierMode.MINMIN if lower else QuantifierMode.MAXMAX
            case Quantifier.EXISTS:
                return QuantifierMode.MAXMAX if lower else QuantifierMode.MINMIN
            case Quantifier.SCHED:
                return QuantifierMode.MAXIMIN if lower else QuantifierMode.MINIMAX
            case Quantifier.NATURE:
                return QuantifierMode.MINIMAX if lower else QuantifierMode.MAXIMIN


class TrueFormula(msgspec.Struct, frozen=True, tag="true"):
    def __str__(self) -> str:
        return "true"


class Atom(msgspec.Struct, frozen=True, tag="atom"):
    prop: str

    def __str__(self) -> str:
        return f'"{self.prop}"'


class Not(msgspec.Struct, frozen=True, tag="not"):
    operand: StateFormula

    def __str__(self) -> str:
        return f"!{_wrap(self.operand)}"


class And(msgspec.Struct, frozen=True, tag="and"):
    left: StateFormula
    right: StateFormula

    def __str__(self) -> str:
        return f"{_wrap(self.left)} & {_wrap(self.right)}"


class Next(msgspec.Struct, frozen=True, tag="next"):
    operand: StateFormula

    def __str__(self) -> str:
        return f"X {_wrap(self.operand)}"


class BoundedUntil(msgspec.Struct, frozen=True, tag="bounded-until"):
    left: StateFormula
    right: StateFormula
    horizon: Annotated[int, msgspec.Meta(ge=0)]

    def __str__(self) -> str:
        return f"{_wrap(self.left)} U<={self.horizon} {_wrap(self.right)}"


class Until(msgspec.Struct, frozen=True, tag="until"):
    """Unbounded until; parsed, never evaluated."""

    left: StateFormula
    right: StateFormula

    def __str__(self) -> str:
        return f"{_wrap(self.left)} U {_wrap(self.right)}"


PathFormula = Union[Next, BoundedUntil, Until]


class Prob(msgspec.Struct, frozen=True, tag="prob"):
    """
    ``P ⋈ p [ path ]`` decided by the ``mode``-extremal value.

    ``quantifier`` records the surface quantifier the mode was derived from,
    when there was one.
    """

    comparison: Comparison
    threshold: Fraction
    path: PathFormula
    mode: QuantifierMode
    quantifier: Optional[Quantifier] = None

    def __str__(self) -> str:
        mode = self.quantifier.value if self.quantifier else self.mode.value
        return f"P{self.comparison.value}{self.threshold} [ {self.path} ] mode={mode}"


StateFormula = Union[TrueFormula, Atom, Not, And, Prob]


def _wrap(formula: StateFormula) -> str:
    if isinstance(formula, (And, Prob)):
        return f"({formula})"
    return str(formula)


def false() -> StateFormula:
    return Not(TrueFormula())
