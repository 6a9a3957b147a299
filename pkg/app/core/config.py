"""
Configuration management for the perfect cone intersection calculator.
Loads settings from environment variables via pydantic-settings.

None of these values changes a computed number; they only tune logging
and how table rows are scheduled.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(env_prefix="PERFCONE_", extra="ignore")

    # Logging
    LOG_LEVEL: str = "WARNING"
    DEBUG: bool = False
    COLOR_LOGS: bool = True

    # Scheduling
    WORKERS: int = Field(default=1, ge=1)

    # Randomized engine probes in `crosscheck`
    CROSSCHECK_SEED: int = 20080


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Global settings instance
settings = get_settings()
