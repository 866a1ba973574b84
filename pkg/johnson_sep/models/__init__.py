"""
Johnson Sep Data Models
=======================

Pydantic models for file inputs and experiment reports.
"""

from .push import (
    HomologyModelFile,
    LiftCriterionInput,
    PushDatum,
    PushKind,
)
from .automorphism import AutomorphismFile
from .quotient import QuotientSpec, load_quotient_spec
from .report import ExperimentReport, ReportStatus, Verdict

__all__ = [
    # Inputs
    "AutomorphismFile",
    "QuotientSpec",
    "load_quotient_spec",
    # Pushes
    "PushDatum",
    "PushKind",
    "HomologyModelFile",
    "LiftCriterionInput",
    # Reports
    "ExperimentReport",
    "ReportStatus",
    "Verdict",
]
