"""
Runtime configuration for Smarandache Lab.

All values have working defaults; none of them needs an environment
variable. Overrides are read from ``ALGLAB_*`` variables or a local ``.env``.
"""
from functools import lru_cache
from typing import Literal, Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Tunable limits, audit sizes and sweep options."""

    model_config = SettingsConfigDict(
        env_prefix="ALGLAB_",
        env_file=".env",
        extra="ignore",
    )

    # Axiom reports
    violation_cap: int = 16

    # Enumeration oracles and sampled audits
    oracle_bound: int = 10_000
    audit_samples: int = 500
    audit_magnitude: int = 20
    default_seed: int = 0

    # Table-size guards
    max_table_order: int = 1024
    verify_on_build_max_order: int = 128
    max_symmetric_degree: int = 6
    max_symmetric_semigroup_degree: int = 5
    max_matrix_size: int = 2
    enumeration_limit: int = 4096
    closed_subset_limit: Optional[int] = None

    # Near-ring automata
    freeness_bound: int = 12

    # Sweeps
    sweep_time_budget_seconds: float = 120.0
    celery_broker_url: Optional[str] = None
    celery_result_backend: Optional[str] = None
    sweep_eager: bool = True

    # Logging
    log_level: str = "WARNING"
    log_renderer: Literal["json", "console"] = "json"


@lru_cache()
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()
