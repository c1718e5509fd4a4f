import os
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from sullivan_kit.constants import COHOMOLOGY_MARGIN, SEARCH_MAX_K, SEARCH_MAX_N


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {value!r}")


class ToolkitConfig(BaseModel):
    """The configuration used for a computation.

    Values may be sourced via command line options, env vars, config files.
    """

    model_config = ConfigDict(frozen=True)

    basis_limit: int = Field(
        default_factory=lambda: _env_int("SULLIVAN_KIT_BASIS_LIMIT", 20_000)
    )
    """The largest monomial basis (in a single degree) we are willing to build.
    Cohomology computations that need a larger basis stop with a resource error
    instead of grinding away."""
    cohomology_margin: int = Field(default=COHOMOLOGY_MARGIN)
    """How many degrees above the formal dimension are computed when the cutoff
    is chosen for you. Vanishing in this window is itself checked."""
    search_max_n: int = Field(default=SEARCH_MAX_N)
    """The largest manifold dimension the Euler characteristic search accepts."""
    search_max_k: int = Field(default=SEARCH_MAX_K)
    """The largest symmetry parameter the Euler characteristic search accepts."""
    search_workers: int = Field(
        default_factory=lambda: _env_int("SULLIVAN_KIT_WORKERS", 1)
    )
    """Number of worker processes for partitioned searches. 1 runs in-process."""
    lefschetz_trials: int = Field(default=32)
    """Random rational combinations tried when searching for a Lefschetz class."""
    random_seed: int = Field(default_factory=lambda: _env_int("SULLIVAN_KIT_SEED", 0))
    output_format: Literal["human", "machine"] = Field(
        default=os.getenv("SULLIVAN_KIT_FORMAT", "human")  # type: ignore[arg-type]
    )

    @field_validator("basis_limit", "search_max_n", "search_max_k", "search_workers")
    def positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be a positive integer")
        return value

    @field_validator("cohomology_margin", "lefschetz_trials")
    def non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("must not be negative")
        return value

    @classmethod
    def get_current(cls) -> "ToolkitConfig":
        return cls()
