"""
Settings Configuration
======================

Centralized settings management using Pydantic.
All settings loaded from environment variables prefixed with ``JS_``.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="JS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # ==========================================================================
    # Application
    # ==========================================================================
    app_name: str = Field(default="johnson-sep")
    log_level: str = Field(default="WARNING")

    # ==========================================================================
    # Magnus expansions
    # ==========================================================================
    degree_cap: int = Field(default=4, ge=1)
    max_degree_cap: int = Field(default=6, ge=1)

    # ==========================================================================
    # Words and covers
    # ==========================================================================
    word_length_limit: int = Field(default=1_000_000, ge=1)
    power_squaring_threshold: int = Field(default=64, ge=1)
    quotient_closure_limit: int = Field(default=4096, ge=1)
    deck_enumeration_limit: int = Field(default=512, ge=1)

    # ==========================================================================
    # Lattices
    # ==========================================================================
    pass_limit: int = Field(default=64, ge=1)
    oracle_prime: int = Field(default=5, ge=2)

    # ==========================================================================
    # Sampled experiments
    # ==========================================================================
    random_seed: int = Field(default=20240601)


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Global settings instance for convenience
settings = get_settings()
