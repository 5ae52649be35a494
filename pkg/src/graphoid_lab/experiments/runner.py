"""
Experiment runner for Graphoid Lab
"""

import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, List, Optional

from ..config.manager import ConfigManager
from ..utils.exceptions import InputError
from ..utils.logging import get_logger, log_performance
from .fixtures import trial_seed
from .models import ExperimentConfig, ExperimentReport, TrialResult
from .suites import Suite, SuiteContext, get_suite

logger = get_logger(__name__)

CAP_KEYS = (
    'closure_max_variables',
    'induced_max_variables',
    'uncoupled_max_variables',
    'proptrans_max_variables',
    'discrimination_max_variables',
    'trail_cap',
)

# generators.<key> in the configuration -> SuiteContext field
GENERATOR_KEYS = {
    'scheme': 'scheme',
    'max_weight': 'max_weight',
    'gaussian_epsilon': 'epsilon',
    'sparse_zero_fraction': 'zero_fraction',
}


class ExperimentRunner:
    """Runs seeded experiment suites, in parallel when configured"""

    def __init__(self, config: ConfigManager):
        """
        Initialize experiment runner

        Args:
            config: Configuration manager
        """
        self.config = config

        self.limits = config.get('limits', {})
        self.numerics = config.get('numerics', {})
        self.generators = config.get('generators', {})

        self.experiments_config = config.get('experiments', {})
        self.parallel = self.experiments_config.get('parallel', True)
        self.max_workers = self.experiments_config.get('max_workers', 4)

    def context_for(self, cfg: ExperimentConfig, suite: Suite) -> SuiteContext:
        """Merge configuration, suite defaults and per-run overrides"""
        unknown = sorted(set(cfg.caps) - set(CAP_KEYS))
        if unknown:
            raise InputError(f"unknown caps {unknown} (choose from {', '.join(CAP_KEYS)})", field="caps")

        caps = {key: self.limits[key] for key in CAP_KEYS if key in self.limits}
        caps.update(cfg.caps)

        if cfg.tolerance is not None:
            tolerance = cfg.tolerance
        elif suite.default_tolerance is not None:
            tolerance = suite.default_tolerance
        else:
            tolerance = self.numerics.get('gaussian_tolerance', 1e-9)

        settings = dict(
            n=cfg.n,
            tolerance=float(tolerance),
            full_ordering_max_variables=self.experiments_config.get('full_ordering_max_variables', 5),
            sampled_orderings=cfg.orderings or self.experiments_config.get('sampled_orderings', 50),
            **caps,
        )
        if 'unification_grid' in self.numerics:
            settings['unification_grid'] = tuple(self.numerics['unification_grid'])
        for source, target in GENERATOR_KEYS.items():
            if source in self.generators:
                settings[target] = self.generators[source]
        return SuiteContext(**settings)

    @log_performance
    def run(self, cfg: ExperimentConfig) -> ExperimentReport:
        """
        Run every trial of a suite and assemble the report by trial index

        Args:
            cfg: Experiment configuration

        Returns:
            ExperimentReport; aggregate pass iff every trial passed
        """
        suite = get_suite(cfg.suite, cfg.exploratory)
        if cfg.trials < 1:
            raise InputError(f"trial count must be at least 1, got {cfg.trials}", field="trials")
        if cfg.n < suite.min_variables:
            raise InputError(f"suite '{suite.name}' needs at least {suite.min_variables} variables",
                             field="n")

        ctx = self.context_for(cfg, suite)
        trials = suite.fixed_trials or cfg.trials
        logger.info(f"Running suite {suite.name}: {trials} trials, n={cfg.n}, seed={cfg.seed}")

        start = time.perf_counter()
        if self.parallel and trials > 1:
            results = self._run_trials_parallel(suite, ctx, cfg.seed, trials)
        else:
            results = self._run_trials_sequential(suite, ctx, cfg.seed, trials)
        elapsed = time.perf_counter() - start

        report = self._aggregate_results(suite, cfg, ctx, [results[i] for i in range(trials)], elapsed)
        logger.info(
            f"Suite {suite.name} {'passed' if report.passed else 'FAILED'}: "
            f"{len(report.failed_trials)} of {trials} trials failed"
        )
        return report

    def _run_trials_parallel(self, suite: Suite, ctx: SuiteContext, seed: int,
                             trials: int) -> Dict[int, TrialResult]:
        """Run trials on a thread pool"""
        logger.debug(f"Running {trials} trials in parallel with {self.max_workers} workers")

        results: Dict[int, TrialResult] = {}
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = {
                executor.submit(suite.run_trial, ctx, index, trial_seed(seed, index)): index
                for index in range(trials)
            }
            for future in as_completed(futures):
                index = futures[future]
                try:
                    results[index] = future.result()
                except Exception as e:
                    logger.error(f"Trial {index} of {suite.name} failed: {e}")
                    raise
        return results

    def _run_trials_sequential(self, suite: Suite, ctx: SuiteContext, seed: int,
                               trials: int) -> Dict[int, TrialResult]:
        """Run trials one after another"""
        logger.debug(f"Running {trials} trials sequentially")

        results: Dict[int, TrialResult] = {}
        for index in range(trials):
            try:
                results[index] = suite.run_trial(ctx, index, trial_seed(seed, index))
            except Exception as e:
                logger.error(f"Trial {index} of {suite.name} failed: {e}")
                raise
        return results

    def _aggregate_results(self, suite: Suite, cfg: ExperimentConfig, ctx: SuiteContext,
                           results: List[TrialResult], elapsed: float) -> ExperimentReport:
        first = next((trial for trial in results if not trial.passed), None)
        echoed = ExperimentConfig(
            suite=cfg.suite,
            n=cfg.n,
            trials=len(results),
            seed=cfg.seed,
            tolerance=ctx.tolerance,
            orderings=ctx.sampled_orderings,
            caps={key: getattr(ctx, key) for key in CAP_KEYS},
            generators={key: getattr(ctx, target) for key, target in GENERATOR_KEYS.items()},
            exploratory=cfg.exploratory,
        )
        return ExperimentReport(
            suite=suite.name,
            config=echoed,
            trials=results,
            passed=first is None,
            first_counterexample=(
                {'trial': first.index, 'seed': first.seed, **(first.counterexample or {})}
                if first else None
            ),
            total_checks=sum(trial.checks for trial in results),
            antecedent_hits=sum(trial.antecedent_hits for trial in results),
            skipped_instances=sum(trial.skipped_instances for trial in results),
            wall_time=elapsed,
            exploratory=suite.exploratory,
        )


def run_experiment(cfg: ExperimentConfig, config: Optional[ConfigManager] = None) -> ExperimentReport:
    """Run one suite with the given (or default) configuration"""
    return ExperimentRunner(config or ConfigManager()).run(cfg)
