from .compose import IDLE_ACTION, compose, product_state
from .imdp import (
    IMDP,
    ModelMetrics,
    Row,
    ValidationReport,
    Violation,
    metrics,
    validate,
)
from .interval import ZERO_INTERVAL, Interval, as_rational, parse_rational
from .textformat import parse, serialize

__all__ = [
    "IDLE_ACTION",
    "IMDP",
    "Interval",
    "ModelMetrics",
    "Row",
    "ValidationReport",
    "Violation",
    "ZERO_INTERVAL",
    "as_rational",
    "compose",
    "metrics",
    "parse",
    "parse_rational",
    "product_state",
    "serialize",
    "validate",
]
