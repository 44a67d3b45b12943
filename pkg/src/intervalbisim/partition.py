"""Partitions of a state set into disjoint blocks."""

from __future__ import annotations

from typing import Iterable

import msgspec

from .types import State

BlockId = int


class Partition(msgspec.Struct, frozen=True):
    """
    An equivalence relation on states, kept in canonical form.

    Every block is a sorted tuple of states and blocks are ordered by their
    least state, so equal relations have equal values. A block id is the
    position of the block in ``blocks`` and is only meaningful for the
    partition it came from.
    """

    blocks: tuple[tuple[State, ...], ...]
    block_of: dict[State, BlockId]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[State]]) -> Partition:
        canonical = sorted(tuple(sorted(set(b))) for b in blocks)
        canonical = [b for b in canonical if b]
        block_of: dict[State, BlockId] = {}
        for i, block in enumerate(canonical):
            for s in block:
                if s in block_of:
                    raise ValueError(f"state {s!r} appears in two blocks")
                block_of[s] = i
        return cls(blocks=tuple(canonical), block_of=block_of)

    @classmethod
    def identity(cls, states: Iterable[State]) -> Partition:
        return cls.from_blocks([s] for s in states)

    @property
    def states(self) -> tuple[State, ...]:
        return tuple(sorted(self.block_of))

    def __len__(self) -> int:
        return len(self.blocks)

    def block(self, state: State) -> tuple[State, ...]:
        return self.blocks[self.block_of[state]]

    def same_block(self, s: State, t: State) -> bool:
        return self.block_of[s] == self.block_of[t]

    def split(self, block: BlockId, part: Iterable[State]) -> Partition:
        """Splits ``block`` into ``part`` and the rest; a trivial split returns ``self``."""
        chosen = set(part)
        inside = [s for s in self.blocks[block] if s in chosen]
        outside = [s for s in self.blocks[block] if s not in chosen]
        if not inside or not outside:
            return self
        rest = [b for i, b in enumerate(self.blocks) if i != block]
        return Partition.from_blocks([*rest, inside, outside])

    def refines(self, other: Partition) -> bool:
        """True iff every block of ``self`` lies inside a block of ``other``."""
        if set(self.block_of) != set(other.block_of):
            return False
        return all(
            len({other.block_of[s] for s in block}) == 1 for block in self.blocks
        )

    def dump(self) -> str:
        """One ``B<k>: s1 s2 ...`` line per block."""
        return "".join(f"B{k}: {' '.join(b)}\n" for k, b in enumerate(self.blocks))
