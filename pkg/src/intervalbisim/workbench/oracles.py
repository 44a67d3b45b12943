"""Independent numeric oracles used to cross-check the exact engines."""

from __future__ import annotations

from fractions import Fraction
from typing import AbstractSet, Annotated, Literal, Optional

import msgspec

from ..errors import OracleBoundExceeded
from ..geometry.minimal import mixture_contained, remaining_polytopes, state_polytopes
from ..geometry.polytope import combination_count, weight_grid
from ..log import create_logger
from ..model.imdp import IMDP
from ..partition import Partition
from ..types import ONE, ZERO, Action, State
from ..utils.functions import parallel_map

logger = create_logger(__name__)


class GridOracleConfig(msgspec.Struct, frozen=True, kw_only=True):
    denominator: Annotated[int, msgspec.Meta(ge=1)] = 8
    combination_cap: Annotated[int, msgspec.Meta(ge=1)] = 200_000
    jobs: Annotated[int, msgspec.Meta(ge=1)] = 1


def grid_containment_oracle(
    model: IMDP,
    state: State,
    action: Action,
    partition: Partition,
    config: Optional[GridOracleConfig] = None,
) -> bool:
    """
    Whether some grid weight vector mixes the state's remaining polytopes
    into ``H(state, action, partition)``.

    Every corner combination of a candidate mixture is checked, so a
    witness is exact; the absence of a witness proves nothing.

    Raises:
        OracleBoundExceeded: If the corner combinations exceed the cap.
    """
    config = config or GridOracleConfig()
    polytopes = state_polytopes(model, state, partition)
    target = polytopes[action]
    remaining = remaining_polytopes(target, list(polytopes.values()))
    if not remaining:
        return False

    combinations = combination_count(remaining)
    if combinations > config.combination_cap:
        raise OracleBoundExceeded(
            f"{combinations} corner combinations exceed the cap of {config.combination_cap}"
        )

    grid = list(weight_grid(len(remaining), config.denominator))
    verdicts = parallel_map(
        lambda rho: mixture_contained(rho, remaining, target), grid, jobs=config.jobs
    )
    witnesses = sum(verdicts)
    logger.debug(
        "grid oracle %s/%s: %d of %d weight vectors are witnesses",
        state,
        action,
        witnesses,
        len(grid),
    )
    return witnesses > 0


def classical_bounded_until(
    model: IMDP,
    left: AbstractSet[State],
    right: AbstractSet[State],
    horizon: int,
    extremum: Literal["min", "max"],
) -> dict[State, Fraction]:
    """
    Bounded until on a model whose intervals are all points, by plain MDP
    value iteration.

    Raises:
        ValueError: If some interval is not a point.
    """
    for (s, a), row in model.transitions.items():
        if any(not i.is_point for i in row.values()):
            raise ValueError(f"{s} {a} has a non-point interval")

    pick = max if extremum == "max" else min
    values = {s: ONE if s in right else ZERO for s in model.states}
    for _ in range(horizon):
        values = {
            s: (
                values[s]
                if s in right or s not in left
                else pick(
                    sum((i.lo * values[t] for t, i in model.row(s, a).items()), ZERO)
                    for a in model.enabled_actions(s)
                )
            )
            for s in model.states
        }
    return values
