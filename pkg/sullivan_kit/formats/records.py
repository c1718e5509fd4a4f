from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator


class GeneratorRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    degree: int


class ModelRecord(BaseModel):
    """A Sullivan model (or, with `fiber`, a relative model) as stored on disk."""

    model_config = ConfigDict(frozen=True)

    name: str | None = None
    provenance: str | None = None
    generators: list[GeneratorRecord]
    """Declaration order matters: it fixes the signs of products of odd generators."""
    differential: dict[str, str] = Field(default_factory=dict)
    """Generator name to polynomial text. Generators left out are closed."""
    fiber: list[str] | None = None
    """Names of the fiber generators of a relative model."""

    @field_validator("generators", mode="before")
    def generators_from_table(cls, value: Any) -> Any:
        # `generators = { a = 2, x = 3 }` is accepted as a shorthand
        if isinstance(value, dict):
            return [{"name": name, "degree": degree} for name, degree in value.items()]
        return value

    @property
    def is_relative(self) -> bool:
        return self.fiber is not None
