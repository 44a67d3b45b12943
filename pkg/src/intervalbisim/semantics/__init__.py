from .checker import check_state_formula, evaluate, path_values
from .formulas import (
    And,
    Atom,
    BoundedUntil,
    Comparison,
    Next,
    Not,
    PathFormula,
    Prob,
    Quantifier,
    QuantifierMode,
    StateFormula,
    TrueFormula,
    Until,
)
from .parser import parse_formula
from .values import (
    ValueVector,
    extremal_bounded_until,
    extremal_next,
    indicator,
    inner_optimum,
)

__all__ = [
    "And",
    "Atom",
    "BoundedUntil",
    "Comparison",
    "Next",
    "Not",
    "PathFormula",
    "Prob",
    "Quantifier",
    "QuantifierMode",
    "StateFormula",
    "TrueFormula",
    "Until",
    "ValueVector",
    "check_state_formula",
    "evaluate",
    "extremal_bounded_until",
    "extremal_next",
    "indicator",
    "inner_optimum",
    "parse_formula",
    "path_values",
]
