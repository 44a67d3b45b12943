"""
Exact minimisation of interval MDPs under cooperative and competitive
probabilistic bisimulation.
"""

from .bisim import bisimulation, brute_force_bisimulation, quotient
from .config import Settings
from .errors import IntervalBisimError
from .model import IMDP, Interval, parse, serialize, validate
from .partition import Partition
from .semantics import evaluate, parse_formula
from .types import BisimKind

__all__ = [
    "BisimKind",
    "IMDP",
    "Interval",
    "IntervalBisimError",
    "Partition",
    "Settings",
    "bisimulation",
    "brute_force_bisimulation",
    "evaluate",
    "parse",
    "parse_formula",
    "quotient",
    "serialize",
    "validate",
]
