"""
Seeded experiment suites for Graphoid Lab
"""

from .fixtures import trial_seed
from .models import ExperimentConfig, ExperimentReport, TrialResult
from .runner import ExperimentRunner, run_experiment
from .suites import SUITES, Suite, SuiteContext, get_suite

__all__ = [
    "ExperimentConfig",
    "ExperimentReport",
    "ExperimentRunner",
    "SUITES",
    "Suite",
    "SuiteContext",
    "TrialResult",
    "get_suite",
    "run_experiment",
    "trial_seed",
]
