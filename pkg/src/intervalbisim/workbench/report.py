"""Reduction reports: how much a bisimulation quotient shrinks a model."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import msgspec
from jinja2 import Environment

from ..bisim.quotient import quotient
from ..bisim.refinement import bisimulation
from ..log import create_logger
from ..model.imdp import IMDP, metrics
from ..partition import Partition
from ..types import ZERO, BisimKind

logger = create_logger(__name__)


class ReductionReport(msgspec.Struct, frozen=True, kw_only=True, rename="camel"):
    original_states: int
    original_transitions: int
    quotient_states: int
    quotient_transitions: int
    state_reduction_factor: Fraction
    transition_reduction_factor: Fraction


class Reduction(msgspec.Struct, frozen=True):
    """A minimisation run: the partition, the quotient it induces and its report."""

    kind: BisimKind
    partition: Partition
    quotient: IMDP
    report: ReductionReport


def _factor(original: int, reduced: int) -> Fraction:
    if original == 0:
        return ZERO
    return 1 - Fraction(reduced, original)


def reduction_report(original: IMDP, quotient_model: IMDP) -> ReductionReport:
    """Exact counts of both models and the factors ``1 - quotient / original``."""
    before = metrics(original)
    after = metrics(quotient_model)
    return ReductionReport(
        original_states=before.state_count,
        original_transitions=before.transition_count,
        quotient_states=after.state_count,
        quotient_transitions=after.transition_count,
        state_reduction_factor=_factor(before.state_count, after.state_count),
        transition_reduction_factor=_factor(
            before.transition_count, after.transition_count
        ),
    )


def minimise(model: IMDP, kind: BisimKind, *, jobs: int = 1) -> Reduction:
    partition = bisimulation(model, kind, jobs=jobs)
    reduced = quotient(model, partition)
    report = reduction_report(model, reduced)
    logger.info(
        "%s: %d -> %d states",
        kind.value,
        report.original_states,
        report.quotient_states,
    )
    return Reduction(kind=kind, partition=partition, quotient=reduced, report=report)


_environment = Environment(
    autoescape=False, trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True
)

_TABLE = _environment.from_string(
    """\
{{ "%-*s"|format(width, "model") }} | {{ "%8s"|format("states") }} {{ "%11s"|format("transitions") }} | {{ "%8s"|format("states") }} {{ "%11s"|format("transitions") }} | {{ "%8s"|format("states") }} {{ "%11s"|format("transitions") }}
{{ "%-*s"|format(width, "") }} | {{ "%-20s"|format("original") }} | {{ "%-20s"|format("minimised") }} | {{ "%-20s"|format("reduction factor") }}
{{ "-" * (width + 69) }}
{% for name, report in rows %}
{{ "%-*s"|format(width, name) }} | {{ "%8d"|format(report.original_states) }} {{ "%11d"|format(report.original_transitions) }} | {{ "%8d"|format(report.quotient_states) }} {{ "%11d"|format(report.quotient_transitions) }} | {{ "%7.1f%%"|format(report.state_reduction_factor * 100) }} {{ "%10.1f%%"|format(report.transition_reduction_factor * 100) }}
{% endfor %}
"""
)


def render_table(rows: Sequence[tuple[str, ReductionReport]]) -> str:
    """An aligned plain-text table with one line per named model."""
    width = max([len("model"), *(len(name) for name, _ in rows)])
    return _TABLE.render(width=width, rows=rows)
