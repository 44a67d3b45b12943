"""Closed rational subintervals of [0, 1]."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

import msgspec

from ..errors import InvalidInterval
from ..types import ONE, ZERO

RationalLike = Union[Fraction, int, str]

_RATIONAL = re.compile(r"^[+-]?(\d+/\d+|\d+(\.\d*)?|\.\d+)$")


def parse_rational(text: str) -> Fraction:
    """
    Reads ``num/den`` or a decimal literal exactly (``"0.3"`` is ``3/10``).

    Raises:
        ValueError: If ``text`` is neither form or has a zero denominator.
    """
    literal = text.strip()
    if not _RATIONAL.match(literal):
        raise ValueError(f"malformed rational {text!r}")
    try:
        return Fraction(literal)
    except ZeroDivisionError as e:
        raise ValueError(f"zero denominator in {text!r}") from e


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return parse_rational(value)


def format_rational(value: Fraction) -> str:
    return str(value)


class Interval(msgspec.Struct, frozen=True):
    """
    The interval ``[lo, hi]`` of admissible probabilities for one transition.

    Construction does not check the bounds so that ``validate`` can report
    malformed intervals of hand-built models; use ``Interval.of`` for a
    checked value.
    """

    lo: Fraction
    hi: Fraction

    @classmethod
    def of(cls, lo: RationalLike, hi: RationalLike) -> Interval:
        """
        Builds a well-formed interval.

        Raises:
            InvalidInterval: Unless ``0 <= lo <= hi <= 1``.
        """
        interval = cls(as_rational(lo), as_rational(hi))
        if not interval.is_well_formed:
            raise InvalidInterval(f"invalid interval {interval}")
        return interval

    @classmethod
    def point(cls, value: RationalLike) -> Interval:
        return cls.of(value, value)

    @property
    def is_well_formed(self) -> bool:
        return ZERO <= self.lo <= self.hi <= ONE

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def is_zero(self) -> bool:
        return self.hi == ZERO and self.lo == ZERO

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def complement(self) -> Interval:
        """``[1 - hi, 1 - lo]``, the interval of the other outcome of a binary choice."""
        return Interval(ONE - self.hi, ONE - self.lo)

    def scale(self, factor: Fraction) -> Interval:
        return Interval(self.lo * factor, self.hi * factor)

    def contains(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)},{format_rational(self.hi)}]"


ZERO_INTERVAL = Interval(ZERO, ZERO)
