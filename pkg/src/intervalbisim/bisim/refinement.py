"""
Partition refinement for the cooperative and the competitive bisimulation.

Both engines run the same loop: start from the label partition, and for each
state ``s`` split its block into the states that do not violate the
bisimulation condition against ``s`` and those that do, until a full sweep
changes nothing. A violation between two states of one block is decided by
comparing per-state signatures computed against the current partition:

* cooperative: the extreme points of the union of the state's class
  polytopes, i.e. the vertex set of ``CH(s, R)``;
* competitive: the canonical forms of the state's strictly minimal
  class polytopes.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Hashable, Optional, Sequence

from ..contracts import SignatureFunction, implements
from ..errors import InvariantBreach
from ..geometry.hull import HullFamily, extreme_points, hull_equal
from ..geometry.minimal import minimal_signature, state_polytopes
from ..geometry.polytope import distinct, vertices
from ..log import create_logger
from ..model.imdp import IMDP
from ..partition import Partition
from ..types import BisimKind, State
from ..utils.functions import parallel_map

logger = create_logger(__name__)


def initial_partition(model: IMDP) -> Partition:
    """Groups states by label set."""
    groups: dict[frozenset[str], list[State]] = defaultdict(list)
    for s in model.states:
        groups[model.label(s)].append(s)
    return Partition.from_blocks(groups.values())


@implements(SignatureFunction)
class CooperativeSignature:
    """The vertex set of the convex hull of all class polytopes of a state."""

    def __init__(self, model: IMDP) -> None:
        self.model = model

    def __call__(self, state: State, partition: Partition) -> Hashable:
        polytopes = distinct(state_polytopes(self.model, state, partition).values())
        return extreme_points(v for p in polytopes for v in vertices(p))


@implements(SignatureFunction)
class CompetitiveSignature:
    """The set of strictly minimal class polytopes of a state."""

    def __init__(self, model: IMDP) -> None:
        self.model = model

    def __call__(self, state: State, partition: Partition) -> Hashable:
        polytopes = list(state_polytopes(self.model, state, partition).values())
        return minimal_signature(polytopes)


def signature_for(model: IMDP, kind: BisimKind) -> SignatureFunction[Hashable]:
    if kind is BisimKind.COOPERATIVE:
        return CooperativeSignature(model)
    return CompetitiveSignature(model)


def violate_coop(model: IMDP, s: State, t: State, partition: Partition) -> bool:
    """Whether the hulls ``CH(s, R)`` and ``CH(t, R)`` differ."""
    if s == t:
        return False
    first = HullFamily.of(state_polytopes(model, s, partition).values())
    second = HullFamily.of(state_polytopes(model, t, partition).values())
    return not hull_equal(first, second)


def violate_comp(model: IMDP, s: State, t: State, partition: Partition) -> bool:
    """Whether ``s`` and ``t`` have different sets of strictly minimal polytopes."""
    if s == t:
        return False
    first = minimal_signature(list(state_polytopes(model, s, partition).values()))
    second = minimal_signature(list(state_polytopes(model, t, partition).values()))
    return first != second


class Refinement:
    """
    One run of the refinement loop.

    Signatures are cached per state for the current partition and the cache
    is dropped whenever a block is split.
    """

    def __init__(
        self,
        model: IMDP,
        kind: BisimKind,
        jobs: int = 1,
        order: Optional[Sequence[State]] = None,
    ) -> None:
        self.model = model
        self.kind = kind
        self.jobs = jobs
        self.order = tuple(order) if order is not None else model.states
        if sorted(self.order) != list(model.states):
            raise ValueError("order must be a permutation of the model's states")
        self.signature = signature_for(model, kind)
        self.partition = initial_partition(model)
        self.sweeps = 0
        self._cache: dict[State, Hashable] = {}

    def _signatures(self, block: Sequence[State]) -> None:
        missing = [s for s in block if s not in self._cache]
        partition = self.partition
        computed = parallel_map(
            lambda s: self.signature(s, partition), missing, jobs=self.jobs
        )
        self._cache.update(zip(missing, computed))

    def sweep(self) -> int:
        """Visits every state once; returns the number of splits."""
        splits = 0
        for s in self.order:
            block_id = self.partition.block_of[s]
            block = self.partition.blocks[block_id]
            if len(block) == 1:
                continue
            self._signatures(block)
            reference = self._cache[s]
            agreeing = [t for t in block if self._cache[t] == reference]
            refined = self.partition.split(block_id, agreeing)
            if refined is not self.partition:
                self.partition = refined
                self._cache.clear()
                splits += 1
        return splits

    def run(self) -> Partition:
        initial_blocks = len(self.partition)
        bound = len(self.model.states) - initial_blocks + 1
        while True:
            previous = self.partition
            self.sweeps += 1
            if self.sweeps > bound:
                raise InvariantBreach(
                    f"refinement did not stabilise within {bound} sweeps"
                )
            splits = self.sweep()
            if not self.partition.refines(previous):
                raise InvariantBreach("refinement produced a coarser partition")
            logger.debug(
                "sweep %d: %d blocks after %d splits",
                self.sweeps,
                len(self.partition),
                splits,
            )
            if splits == 0:
                return self.partition


def bisimulation(
    model: IMDP,
    kind: BisimKind,
    *,
    jobs: int = 1,
    order: Optional[Sequence[State]] = None,
) -> Partition:
    """
    The coarsest ``kind`` bisimulation of ``model``.

    Args:
        model: A valid model.
        kind: Cooperative or competitive.
        jobs: Worker threads for signature computation.
        order: State visiting order; the result does not depend on it.

    Raises:
        InvariantBreach: If a sweep coarsens the partition or the loop
            exceeds its iteration bound.
    """
    refinement = Refinement(model, kind, jobs=jobs, order=order)
    partition = refinement.run()
    logger.debug(
        "%s bisimulation: %d states -> %d blocks in %d sweeps",
        kind.value,
        len(model.states),
        len(partition),
        refinement.sweeps,
    )
    return partition
