"""Shared aliases and enumerations."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import TypeAlias

State: TypeAlias = str
Action: TypeAlias = str
Prop: TypeAlias = str
Rational: TypeAlias = Fraction

# A point over an ordered block list; coordinate i belongs to block i.
Point: TypeAlias = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class BisimKind(enum.StrEnum):
    """Which resolution of the two non-determinisms the bisimulation assumes."""

    COOPERATIVE = "coop"
    COMPETITIVE = "comp"
