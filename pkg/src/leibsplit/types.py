"""Interchange documents, reports and settings for leibsplit."""

from __future__ import annotations

import os
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from leibsplit.errors import UsageError

SEED_ENV_VAR = "LEIBSPLIT_SEED"
DEFAULT_SEED = 20240531


class ConstantEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    i: int = Field(ge=0)
    j: int = Field(ge=0)
    k: int = Field(ge=0)
    c: str | int


class BundleDocument(BaseModel):
    """JSON structure-constant format shared by the CLI, the catalog and the library."""

    model_config = ConfigDict(extra="forbid")

    dim: int = Field(gt=0)
    products: dict[str, list[ConstantEntry]] = Field(default_factory=dict)
    forms: dict[str, list[list[str | int]]] = Field(default_factory=dict)
    maps: dict[str, list[list[str | int]]] = Field(default_factory=dict)

    @field_validator("products")
    @classmethod
    def _no_duplicate_keys(cls, products: dict[str, list[ConstantEntry]]) -> dict[str, list[ConstantEntry]]:
        for name, entries in products.items():
            seen: set[tuple[int, int, int]] = set()
            for entry in entries:
                key = (entry.i, entry.j, entry.k)
                if key in seen:
                    raise ValueError(f"product {name!r} repeats constant {key}")
                seen.add(key)
        return products


class ClaimModel(BaseModel):
    """One identity-system verdict a fixture is documented to have."""

    model_config = ConfigDict(extra="forbid")

    system: str
    products: list[str] | None = None
    form: str | None = None
    map: str | None = None


class FixtureMeta(BaseModel):
    """Index entry of a cataloged fixture."""

    model_config = ConfigDict(extra="forbid")

    name: str
    file: str
    provenance: str
    passes: list[ClaimModel] = Field(default_factory=list)
    fails: list[ClaimModel] = Field(default_factory=list)


class CounterexampleModel(BaseModel):
    equation_index: int
    equation: str
    basis: list[int]
    defect: list[str] | str
    degrees: list[int] | None = None


class Verdict(BaseModel):
    name: str
    holds: bool | None = None
    skipped: bool = False
    counterexample: CounterexampleModel | None = None
    detail: str | None = None


class Report(BaseModel):
    command: list[str]
    verdicts: list[Verdict] = Field(default_factory=list)
    output: str | None = None
    data: dict[str, Any] | None = None
    error: str | None = None
    exit_code: int = 0


class Settings(BaseModel):
    """Knobs for randomized suites and the CLI."""

    seed: int = DEFAULT_SEED
    samples: int = Field(default=100, ge=0)
    density: int = Field(default=50, ge=0, le=100)
    coefficient_bound: int = Field(default=2, ge=0)
    debug: bool = False

    @classmethod
    def from_env(cls, **overrides: Any) -> Settings:
        """Settings with the seed taken from ``LEIBSPLIT_SEED`` unless overridden."""
        values: dict[str, Any] = {}
        env_seed = os.environ.get(SEED_ENV_VAR)
        if env_seed and overrides.get("seed") is None:
            try:
                values["seed"] = int(env_seed)
            except ValueError:
                raise UsageError(f"{SEED_ENV_VAR} must be an integer, got {env_seed!r}") from None
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

