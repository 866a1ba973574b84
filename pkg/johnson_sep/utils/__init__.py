"""
Johnson Sep Utilities
=====================

Logging setup, recipe parsing and file loaders.
"""

from .log_setup import setup_logging
from .parsing import (
    RecipeParser,
    automorphism_from_file,
    load_automorphism,
    load_homology_model,
    load_push_data,
    parse_recipe,
)

__all__ = [
    "setup_logging",
    "RecipeParser",
    "parse_recipe",
    "automorphism_from_file",
    "load_automorphism",
    "load_homology_model",
    "load_push_data",
]
