"""
Exact linear programming over ``Fraction``.

A thin layer over ``sympy.solvers.simplex.linprog``, which runs a two-phase
simplex with Bland's rule over sympy rationals. Variables are nonnegative;
constraints are ``coefficients . x (<=|=|>=) rhs``. The programs the
bisimulation checks produce are small (tens of variables), so exactness
matters and speed does not.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional, Sequence

import msgspec
import sympy
from sympy.solvers.simplex import InfeasibleLPError, UnboundedLPError, linprog


Sense = Literal["<=", "=", ">="]
Status = Literal["optimal", "infeasible", "unbounded"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Constraint(msgspec.Struct, frozen=True):
    coefficients: tuple[Fraction, ...]
    sense: Sense
    rhs: Fraction

    @classmethod
    def of(
        cls, coefficients: Sequence[Fraction | int], sense: Sense, rhs: Fraction | int
    ) -> Constraint:
        return cls(tuple(Fraction(c) for c in coefficients), sense, Fraction(rhs))


class LPResult(msgspec.Struct, frozen=True):
    status: Status
    point: tuple[Fraction, ...] = ()
    value: Optional[Fraction] = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _upper_rows(
    constraints: Sequence[Constraint],
) -> tuple[list[list[sympy.Rational]], list[sympy.Rational]]:
    """Rewrites every constraint as rows of ``A x <= b``."""
    matrix: list[list[sympy.Rational]] = []
    bound: list[sympy.Rational] = []
    for c in constraints:
        row = [_to_sympy(v) for v in c.coefficients]
        rhs = _to_sympy(c.rhs)
        if c.sense in ("<=", "="):
            matrix.append(row)
            bound.append(rhs)
        if c.sense in (">=", "="):
            matrix.append([-v for v in row])
            bound.append(-rhs)
    return matrix, bound


def solve(
    num_vars: int,
    constraints: Sequence[Constraint],
    objective: Optional[Sequence[Fraction | int]] = None,
    maximize: bool = True,
) -> LPResult:
    """
    Optimizes ``objective . x`` subject to ``constraints`` and ``x >= 0``.

    Without an objective the call is a pure feasibility check and any
    feasible point is returned.
    """
    for c in constraints:
        if len(c.coefficients) != num_vars:
            raise ValueError(
                f"constraint has {len(c.coefficients)} coefficients, expected {num_vars}"
            )
    if objective is not None and len(objective) != num_vars:
        raise ValueError(f"objective has {len(objective)} coefficients, expected {num_vars}")

    if num_vars == 0:
        if all(_satisfied_at_origin(c) for c in constraints):
            return LPResult("optimal", (), None if objective is None else _ZERO)
        return LPResult("infeasible")

    matrix, bound = _upper_rows(constraints)
    if not matrix:
        # linprog needs at least one row; 0 . x <= 0 holds everywhere.
        matrix, bound = [[sympy.Integer(0)] * num_vars], [sympy.Integer(0)]

    sign = -1 if maximize else 1
    cost = [sympy.Integer(0)] * num_vars
    if objective is not None:
        cost = [sign * _to_sympy(Fraction(v)) for v in objective]

    try:
        _, solution = linprog(cost, matrix, bound)
    except InfeasibleLPError:
        return LPResult("infeasible")
    except UnboundedLPError:
        return LPResult("unbounded")

    point = tuple(_to_fraction(x) for x in solution)
    if objective is None:
        return LPResult("optimal", point)
    value = sum((Fraction(c) * x for c, x in zip(objective, point)), _ZERO)
    return LPResult("optimal", point, value)


def _satisfied_at_origin(constraint: Constraint) -> bool:
    match constraint.sense:
        case "<=":
            return _ZERO <= constraint.rhs
        case ">=":
            return _ZERO >= constraint.rhs
        case _:
            return constraint.rhs == _ZERO


def feasible_point(
    num_vars: int, constraints: Sequence[Constraint]
) -> Optional[tuple[Fraction, ...]]:
    """A point satisfying ``constraints`` with ``x >= 0``, or ``None``."""
    result = solve(num_vars, constraints)
    return result.point if result.feasible else None


def in_convex_hull(
    target: Sequence[Fraction], points: Sequence[Sequence[Fraction]]
) -> bool:
    """Whether ``target`` is a convex combination of ``points``."""
    if not points:
        return False
    n = len(points)
    constraints = [Constraint.of([_ONE] * n, "=", _ONE)]
    for k, value in enumerate(target):
        constraints.append(Constraint.of([p[k] for p in points], "=", value))
    return feasible_point(n, constraints) is not None
