"""Runtime settings, overridable from the environment."""

from __future__ import annotations

import os
from typing import Annotated, Mapping, Optional

import msgspec

PositiveInt = Annotated[int, msgspec.Meta(ge=1)]

_ENVIRONMENT_KEYS: dict[str, str] = {
    "IMDP_ORACLE_BOUND": "oracle_bound",
    "IMDP_GRID_DENOMINATOR": "grid_denominator",
    "IMDP_COMBINATION_CAP": "combination_cap",
    "IMDP_JOBS": "jobs",
}


class Settings(msgspec.Struct, frozen=True, kw_only=True):
    """Knobs shared by the engines, the oracles and the CLI."""

    oracle_bound: Annotated[
        PositiveInt,
        msgspec.Meta(description="Largest state count the brute-force oracle accepts"),
    ] = 8
    grid_denominator: Annotated[
        PositiveInt,
        msgspec.Meta(description="Denominator of the rho-grid of the containment oracle"),
    ] = 8
    combination_cap: Annotated[
        PositiveInt,
        msgspec.Meta(description="Largest corner-combination count an oracle enumerates"),
    ] = 200_000
    jobs: Annotated[
        PositiveInt, msgspec.Meta(description="Worker threads for parallel sweeps")
    ] = 1

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> Settings:
        """
        Builds settings from ``IMDP_*`` environment variables.

        Raises:
            msgspec.ValidationError: If a variable does not decode to a positive integer.
        """
        environ = os.environ if environ is None else environ
        raw = {
            field: environ[key]
            for key, field in _ENVIRONMENT_KEYS.items()
            if environ.get(key, "").strip()
        }
        return msgspec.convert(raw, type=cls, strict=False)

    def replace(self, **changes: int) -> Settings:
        return msgspec.structs.replace(self, **changes)
