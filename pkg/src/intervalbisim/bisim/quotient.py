"""Quotient models over bisimulation partitions."""

from __future__ import annotations

from ..errors import NotLabelUniform
from ..geometry.polytope import class_polytope
from ..model.imdp import IMDP, Row
from ..partition import Partition
from ..types import Action, State


def representative(block: tuple[State, ...]) -> State:
    return block[0]


def quotient(model: IMDP, partition: Partition) -> IMDP:
    """
    One state per block, named after the block's least state.

    The representative's actions are kept; the interval from its block to
    block ``C`` under action ``a`` is the bound of ``C`` in the representative's
    class polytope for ``a``. Zero bounds are omitted.

    Raises:
        NotLabelUniform: If a block mixes label sets.
    """
    transitions: dict[tuple[State, Action], Row] = {}
    labels = {}
    for block in partition.blocks:
        rep = representative(block)
        label = model.label(rep)
        mixed = [s for s in block if model.label(s) != label]
        if mixed:
            raise NotLabelUniform(
                f"block of {rep!r} mixes labels {sorted(label)} and "
                f"{sorted(model.label(mixed[0]))} ({mixed[0]!r})"
            )
        labels[rep] = label
        for action in model.enabled_actions(rep):
            polytope = class_polytope(model, rep, action, partition)
            transitions[(rep, action)] = {
                representative(partition.blocks[c]): bound
                for c, bound in zip(polytope.blocks, polytope.bounds)
                if not bound.is_zero
            }

    initial = None
    if model.initial is not None and model.initial in partition.block_of:
        initial = representative(partition.block(model.initial))
    return IMDP.build(
        states=labels,
        transitions=transitions,
        labels=labels,
        initial=initial,
    )
