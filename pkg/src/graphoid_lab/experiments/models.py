"""
Data models for Graphoid Lab experiments
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class ExperimentConfig:
    """Everything that determines an experiment run"""
    suite: str
    n: int = 5
    trials: int = 20
    seed: int = 1
    tolerance: Optional[float] = None
    orderings: Optional[int] = None    # sampled orderings above full enumeration
    caps: Dict[str, int] = field(default_factory=dict)
    generators: Dict[str, Any] = field(default_factory=dict)    # fixture generator settings
    exploratory: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class TrialResult:
    """Outcome of one seeded trial"""
    index: int
    seed: int
    fixture: str
    passed: bool
    checks: int = 0
    antecedent_hits: int = 0
    skipped_instances: int = 0
    counterexample: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'index': self.index,
            'seed': self.seed,
            'fixture': self.fixture,
            'pass': self.passed,
            'checks': self.checks,
            'antecedent_hits': self.antecedent_hits,
            'skipped_instances': self.skipped_instances,
        }
        if self.counterexample is not None:
            result['counterexample'] = self.counterexample
        if self.details:
            result['details'] = self.details
        return result


@dataclass
class ExperimentReport:
    """Complete experiment result"""
    suite: str
    config: ExperimentConfig
    trials: List[TrialResult]
    passed: bool
    first_counterexample: Optional[Dict[str, Any]]
    total_checks: int
    antecedent_hits: int
    skipped_instances: int
    wall_time: float
    exploratory: bool = False

    @property
    def failed_trials(self) -> List[int]:
        return [trial.index for trial in self.trials if not trial.passed]

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        """
        JSON form; wall time is the only nondeterministic field and can be
        left out for byte-identical output
        """
        result = {
            'suite': self.suite,
            'config': self.config.to_dict(),
            'pass': self.passed,
            'exploratory': self.exploratory,
            'trials': [trial.to_dict() for trial in self.trials],
            'failed_trials': self.failed_trials,
            'first_counterexample': self.first_counterexample,
            'total_checks': self.total_checks,
            'antecedent_hits': self.antecedent_hits,
            'skipped_instances': self.skipped_instances,
        }
        if include_timing:
            result['wall_time'] = round(self.wall_time, 3)
        return result
