"""Runtime configuration management using Pydantic settings."""

# Standard library
from functools import lru_cache
from pathlib import Path
from typing import Annotated

# Third-party
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables and .env file."""

    model_config = SettingsConfigDict(
        env_prefix="OMLKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Godowski scan
    ngo_cutoff: Annotated[
        int,
        Field(description="Largest n tested by the n-Go dynamic programming scan", ge=3),
    ] = 100

    # Equation checking
    var_cap: Annotated[
        int,
        Field(description="Maximum number of variables accepted by the brute-force checker", ge=1),
    ] = 10

    chunk_rows: Annotated[
        int,
        Field(description="Upper bound on partial assignments expanded at once by the checker", ge=1_000),
    ] = 500_000

    # Linear programming
    max_pivots: Annotated[
        int,
        Field(description="Pivot ceiling for a single simplex solve", ge=10),
    ] = 10_000

    # Batch processing
    workers: Annotated[
        int,
        Field(description="Size of the worker pool used for lattice batches", ge=1, le=64),
    ] = 4

    verify_laws: Annotated[
        bool,
        Field(description="Verify lattice laws when building each lattice"),
    ] = True

    log_file: Annotated[
        Path | None,
        Field(description="Optional log file; console logging goes to stderr"),
    ] = None


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get or create the global settings instance (singleton pattern)."""
    return Settings()
