"""
Configuration settings for depjsl.

Loads .env vars and exposes the size guards, naturality sampling and
seeding defaults used across the package.
"""

import os
import logging
from typing import Optional

import dotenv

from depjsl.errors import SizeGuardError

dotenv.load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw: Optional[str] = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        return default


class Config:
    """Configuration class for depjsl."""

    # Enumeration guards
    MAX_CONGRUENCE_SIZE: int = _env_int("DEPJSL_MAX_CONGRUENCE_SIZE", 6)
    MAX_TENSOR_CELLS: int = _env_int("DEPJSL_MAX_TENSOR_CELLS", 20)
    MAX_ENUMERATION: int = _env_int("DEPJSL_MAX_ENUMERATION", 200_000)
    MAX_SUBSET_BITS: int = _env_int("DEPJSL_MAX_SUBSET_BITS", 14)

    # Naturality checks: exhaustive up to NATURALITY_FULL morphisms, else a seeded sample
    NATURALITY_FULL: int = _env_int("DEPJSL_NATURALITY_FULL", 200)
    NATURALITY_SAMPLE: int = _env_int("DEPJSL_NATURALITY_SAMPLE", 50)

    # Generators
    SEED: int = _env_int("DEPJSL_SEED", 0)
    GEN_RETRIES: int = _env_int("DEPJSL_GEN_RETRIES", 100)

    LOG_LEVEL: str = os.getenv("DEPJSL_LOG_LEVEL", "INFO")

    @classmethod
    def validate(cls) -> list:
        """
        Validate the configuration and return any issues.

        Returns:
            List of validation error messages
        """
        errors = []

        for name in (
            "MAX_CONGRUENCE_SIZE",
            "MAX_TENSOR_CELLS",
            "MAX_ENUMERATION",
            "MAX_SUBSET_BITS",
            "NATURALITY_FULL",
            "NATURALITY_SAMPLE",
            "GEN_RETRIES",
        ):
            if getattr(cls, name) <= 0:
                errors.append(f"{name} must be positive")

        if cls.SEED < 0:
            errors.append("SEED must be non-negative")

        if not isinstance(logging.getLevelName(cls.LOG_LEVEL.upper()), int):
            errors.append(f"LOG_LEVEL {cls.LOG_LEVEL!r} is not a logging level")

        return errors

    @classmethod
    def get_guard_config(cls) -> dict:
        """
        Get the enumeration guards as a dictionary.

        Returns:
            Dictionary with guard names and bounds
        """
        return {
            "max_congruence_size": cls.MAX_CONGRUENCE_SIZE,
            "max_tensor_cells": cls.MAX_TENSOR_CELLS,
            "max_enumeration": cls.MAX_ENUMERATION,
            "max_subset_bits": cls.MAX_SUBSET_BITS,
        }

    @classmethod
    def get_check_config(cls) -> dict:
        """
        Get the property-check settings as a dictionary.

        Returns:
            Dictionary with naturality sampling and seeding parameters
        """
        return {
            "naturality_full": cls.NATURALITY_FULL,
            "naturality_sample": cls.NATURALITY_SAMPLE,
            "seed": cls.SEED,
            "gen_retries": cls.GEN_RETRIES,
        }

    @classmethod
    def log_level(cls) -> int:
        level = logging.getLevelName(cls.LOG_LEVEL.upper())
        return level if isinstance(level, int) else logging.INFO


def guard(name: str, size: int, bound: int) -> None:
    """Raise ``SizeGuardError`` when *size* exceeds *bound*."""
    if size > bound:
        raise SizeGuardError(
            f"{name}: size {size} exceeds configured bound {bound}",
            witness=size,
        )
