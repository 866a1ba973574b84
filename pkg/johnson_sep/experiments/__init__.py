"""
Johnson Sep Experiments
=======================

Multi-step pipelines, one per reproducible experiment. Each returns an
ExperimentReport whose status summarises its verdicts.
"""

from .claims import (
    claim2_depths,
    frattini_report,
    johnson_depth_report,
    non_faithful,
    verify_claim1,
)
from .orbits import OrbitGroup, OrbitModule, OrbitSeed, orbit_index, snf_report
from .pushes import push_act, push_vanishing_sweep
from .representations import congruence_scan, deck_normalization, rho_report
from .runner import experiment

__all__ = [
    "experiment",
    # Kernel automorphism
    "verify_claim1",
    "johnson_depth_report",
    "claim2_depths",
    "non_faithful",
    "frattini_report",
    # Representations
    "rho_report",
    "deck_normalization",
    "congruence_scan",
    # Orbits
    "OrbitGroup",
    "OrbitModule",
    "OrbitSeed",
    "orbit_index",
    "snf_report",
    # Pushes
    "push_act",
    "push_vanishing_sweep",
]
