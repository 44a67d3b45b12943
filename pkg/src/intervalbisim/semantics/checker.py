"""Bottom-up evaluation of state formulas."""

from __future__ import annotations

from fractions import Fraction

from ..errors import UnboundedUntil
from ..model.imdp import IMDP
from ..types import State
from .formulas import (
    And,
    Atom,
    BoundedUntil,
    Next,
    Not,
    PathFormula,
    Prob,
    QuantifierMode,
    StateFormula,
    TrueFormula,
    Until,
)
from .values import ValueVector, extremal_bounded_until, extremal_next


def path_values(
    model: IMDP, path: PathFormula, mode: QuantifierMode, *, jobs: int = 1
) -> ValueVector:
    """
    Raises:
        UnboundedUntil: For an unbounded until.
    """
    match path:
        case Next(operand=operand):
            return extremal_next(
                model, check_state_formula(model, operand, jobs=jobs), mode, jobs=jobs
            )
        case BoundedUntil(left=left, right=right, horizon=horizon):
            return extremal_bounded_until(
                model,
                check_state_formula(model, left, jobs=jobs),
                check_state_formula(model, right, jobs=jobs),
                horizon,
                mode,
                jobs=jobs,
            )
        case Until():
            raise UnboundedUntil(
                f"unbounded until in {path} cannot be evaluated; give a bound with U<=k"
            )
    raise TypeError(f"not a path formula: {path!r}")


def check_state_formula(
    model: IMDP, formula: StateFormula, *, jobs: int = 1
) -> frozenset[State]:
    """
    The states satisfying ``formula``.

    Raises:
        UnboundedUntil: If a path formula is an unbounded until.
    """
    match formula:
        case TrueFormula():
            return frozenset(model.states)
        case Atom(prop=prop):
            return model.states_with(prop)
        case Not(operand=operand):
            return frozenset(model.states) - check_state_formula(model, operand, jobs=jobs)
        case And(left=left, right=right):
            return check_state_formula(model, left, jobs=jobs) & check_state_formula(
                model, right, jobs=jobs
            )
        case Prob():
            values = path_values(model, formula.path, formula.mode, jobs=jobs)
            return frozenset(
                s
                for s in model.states
                if formula.comparison.holds(values[s], formula.threshold)
            )
    raise TypeError(f"not a state formula: {formula!r}")


def evaluate(
    model: IMDP, formula: StateFormula, *, jobs: int = 1
) -> dict[State, tuple[bool, Fraction | None]]:
    """
    Per-state verdicts, with the extremal value when ``formula`` is a
    probability threshold.
    """
    if isinstance(formula, Prob):
        values = path_values(model, formula.path, formula.mode, jobs=jobs)
        return {
            s: (formula.comparison.holds(values[s], formula.threshold), values[s])
            for s in model.states
        }
    satisfied = check_state_formula(model, formula, jobs=jobs)
    return {s: (s in satisfied, None) for s in model.states}
