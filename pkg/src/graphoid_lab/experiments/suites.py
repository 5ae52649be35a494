"""
Experiment suites for Graphoid Lab

Each suite turns one seeded trial into a TrialResult by generating a fixture
and running the matching property check from the library.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..analysis.unrelatedness import (
    component_unions,
    is_separable,
    is_transitive,
    totally_disconnected_pair,
    totally_independent_pair,
    totally_independent_sets,
    totally_uncoupled_pair,
    totally_uncoupled_sets,
)
from ..distributions.generators import (
    DEFAULT_EPSILON,
    DEFAULT_MAX_WEIGHT,
    DEFAULT_ZERO_FRACTION,
    SCHEME,
    generate,
    make_rng,
    named_example,
    similarity_fixture,
)
from ..distributions.gaussian import DEFAULT_TOLERANCE
from ..distributions.oracles import DEFAULT_INDUCED_MAX_VARIABLES, canonical_triplets, oracle_for
from ..graphoid.model import DependencyModel
from ..graphoid.universe import Universe, VarSet, bit
from ..instantiated.axioms import (
    DEFAULT_PROPTRANS_MAX_VARIABLES,
    DEFAULT_UNIFICATION_GRID,
    check_propositional_transitivity_all,
    check_unification,
)
from ..instantiated.model import InstantiatedModel
from ..network.belief import build, connected_components
from ..network.dseparation import DEFAULT_TRAIL_CAP, d_separated, enumerate_active_trails
from ..simnet.similarity import DEFAULT_DISCRIMINATION_MAX_VARIABLES, SimilarityGraph, check_query_equivalence
from ..utils.exceptions import InputError
from ..utils.logging import get_logger
from .fixtures import (
    binary_fixture,
    disjoint_set_triples,
    gaussian_fixture,
    induced_fixture,
    orderings,
    random_closed_model,
    sparse_fixture,
)
from .models import TrialResult

logger = get_logger(__name__)

GAUSSIAN_AXIOM_TOLERANCE = 1e-7


@dataclass
class SuiteContext:
    """Caps, tolerances and fixture settings shared by every trial of a run"""
    n: int
    tolerance: float = DEFAULT_TOLERANCE
    closure_max_variables: int = 10
    induced_max_variables: int = DEFAULT_INDUCED_MAX_VARIABLES
    uncoupled_max_variables: int = 12
    proptrans_max_variables: int = DEFAULT_PROPTRANS_MAX_VARIABLES
    discrimination_max_variables: int = DEFAULT_DISCRIMINATION_MAX_VARIABLES
    trail_cap: int = DEFAULT_TRAIL_CAP
    full_ordering_max_variables: int = 5
    sampled_orderings: int = 50
    unification_grid: Sequence[float] = DEFAULT_UNIFICATION_GRID
    zero_fraction: float = DEFAULT_ZERO_FRACTION
    max_weight: int = DEFAULT_MAX_WEIGHT
    epsilon: float = DEFAULT_EPSILON
    scheme: str = SCHEME

    def generator_params(self) -> Dict[str, Any]:
        """Parameters handed to every fixture generator of the run"""
        return {
            'scheme': self.scheme,
            'max_weight': self.max_weight,
            'epsilon': self.epsilon,
            'tolerance': self.tolerance,
            'zero_fraction': self.zero_fraction,
        }


TrialFunction = Callable[[SuiteContext, int, int], TrialResult]


@dataclass(frozen=True)
class Suite:
    name: str
    run_trial: TrialFunction
    description: str
    fixed_trials: Optional[int] = None
    default_tolerance: Optional[float] = None
    min_variables: int = 2
    exploratory: bool = False


def _names(universe: Universe, mask: VarSet) -> List[str]:
    return universe.names_of(mask)


def _model_statements(m: DependencyModel) -> List[str]:
    return [t.render(m.universe) for t in m.sorted_statements()]


def run_thm1(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """
    Separable iff transitive; even trials close random seed statements, odd
    trials take the model induced by a generated distribution while n is
    within the induced-model cap
    """
    if index % 2 and ctx.n <= ctx.induced_max_variables:
        fixture, m = induced_fixture(ctx.n, seed, index // 2, ctx.generator_params(),
                                     ctx.induced_max_variables)
    else:
        fixture = 'closed-model'
        m = random_closed_model(ctx.n, seed, max_variables=ctx.closure_max_variables)
    separability = is_separable(m, ctx.uncoupled_max_variables)
    transitivity = is_transitive(m)
    passed = separability.separable == transitivity.transitive

    result = TrialResult(
        index=index, seed=seed, fixture=fixture, passed=passed, checks=1,
        details={'statements': len(m), 'separable': separability.separable,
                 'transitive': transitivity.transitive},
    )
    if not passed:
        result.counterexample = {
            'statements': _model_statements(m),
            **separability.to_dict(m.universe),
            **transitivity.to_dict(m.universe),
        }
    return result


def run_thm3(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """Connected components agree across orderings"""
    kind, p = binary_fixture(ctx.n, seed, index, ctx.generator_params())
    oracle = oracle_for(p)
    universe = p.universe
    orders = orderings(ctx.n, seed, ctx.full_ordering_max_variables, ctx.sampled_orderings)

    reference = connected_components(build(oracle, orders[0]))
    result = TrialResult(index=index, seed=seed, fixture=kind, passed=True,
                         details={'orderings': len(orders), 'components': len(reference)})
    for order in orders:
        result.checks += 1
        components = connected_components(build(oracle, order))
        if components != reference:
            result.passed = False
            result.counterexample = {
                'ordering': [universe.names[i] for i in order],
                'components': [_names(universe, c) for c in components],
                'reference_ordering': [universe.names[i] for i in orders[0]],
                'reference_components': [_names(universe, c) for c in reference],
            }
            break
    return result


def _disconnected_matches_uncoupled(source, label: str, ctx: SuiteContext,
                                    result: TrialResult) -> None:
    oracle = oracle_for(source)
    universe = oracle.universe
    for a, b in combinations(range(universe.size), 2):
        result.checks += 1
        uncoupled = totally_uncoupled_pair(oracle, a, b, ctx.uncoupled_max_variables)
        disconnected = totally_disconnected_pair(oracle, a, b)
        if uncoupled.uncoupled != disconnected.disconnected:
            result.passed = False
            result.counterexample = {
                'source': label,
                'pair': [universe.names[a], universe.names[b]],
                'totally_uncoupled': uncoupled.uncoupled,
                'totally_disconnected': disconnected.disconnected,
                'network': disconnected.network.to_dict(),
            }
            return


def run_thm4(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """Totally disconnected iff totally uncoupled, on a distribution and a closed model"""
    kind, p = binary_fixture(ctx.n, seed, index, ctx.generator_params())
    result = TrialResult(index=index, seed=seed, fixture=f"{kind}+closed-model", passed=True)
    _disconnected_matches_uncoupled(p, kind, ctx, result)
    if result.passed:
        m = random_closed_model(ctx.n, seed, max_variables=ctx.closure_max_variables)
        _disconnected_matches_uncoupled(m, 'closed-model', ctx, result)
        if not result.passed:
            result.counterexample['statements'] = _model_statements(m)
    return result


def _proptrans_trial(source, kind: str, ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    report = check_propositional_transitivity_all(InstantiatedModel(source), ctx.proptrans_max_variables)
    return TrialResult(
        index=index, seed=seed, fixture=kind, passed=report.passed,
        checks=report.checked_instances,
        antecedent_hits=report.antecedent_hits,
        skipped_instances=report.skipped_instances,
        counterexample=report.violation,
    )


def run_thm5_spb(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """Propositional transitivity on strictly positive binary distributions"""
    kind, p = binary_fixture(ctx.n, seed, index, ctx.generator_params())
    return _proptrans_trial(p, kind, ctx, index, seed)


def run_thm5_gauss(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """Propositional transitivity on regular Gaussians"""
    kind, g = gaussian_fixture(ctx.n, seed, index, ctx.generator_params())
    return _proptrans_trial(g, kind, ctx, index, seed)


def run_thm6(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """
    Fixtures passing propositional transitivity are separable; even trials
    are binary, odd trials Gaussian
    """
    if index % 2:
        kind, source = gaussian_fixture(ctx.n, seed, index // 2, ctx.generator_params())
    else:
        kind, source = binary_fixture(ctx.n, seed, index // 2, ctx.generator_params())

    result = _proptrans_trial(source, kind, ctx, index, seed)
    proptrans_passed = result.passed
    result.counterexample = None
    separability = is_separable(oracle_for(source), ctx.uncoupled_max_variables)
    result.checks += 1
    result.passed = separability.separable or not proptrans_passed
    result.details = {'propositional_transitivity': proptrans_passed,
                      'separable': separability.separable}
    if not result.passed:
        result.counterexample = separability.to_dict(source.universe)
    return result


def run_thm7(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """
    d-separation soundness against the build oracle, and agreement of the
    reachability test with the naive trail enumerator
    """
    if index % 2:
        kind, source = gaussian_fixture(ctx.n, seed, index, ctx.generator_params())
    else:
        kind, source = binary_fixture(ctx.n, seed, index, ctx.generator_params())
    oracle = oracle_for(source)
    universe = source.universe
    order = [int(v) for v in make_rng(seed).permutation(ctx.n)]
    net = build(oracle, order)

    result = TrialResult(index=index, seed=seed, fixture=kind, passed=True,
                         details={'ordering': [universe.names[i] for i in order],
                                  'edges': len(net.edges())})
    for t in canonical_triplets(universe.full):
        result.checks += 1
        separated = d_separated(net, t.x, t.y, t.z)
        trails = enumerate_active_trails(net, t.x, t.y, t.z, ctx.trail_cap)
        problem = None
        if separated == bool(trails):
            problem = 'reachability and trail enumeration disagree'
        elif separated and not oracle.independent(t.x, t.y, t.z):
            problem = 'd-separated triplet denied by the distribution'
        if problem:
            result.passed = False
            result.counterexample = {
                'problem': problem,
                'triplet': t.to_dict(universe),
                'd_separated': separated,
                'active_trails': [trail.render(universe) for trail in trails[:10]],
                'network': net.to_dict(),
            }
            break
    return result


def run_lemma2(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """Composition of total independence and of total uncoupledness on closed models"""
    m = random_closed_model(ctx.n, seed, max_variables=ctx.closure_max_variables)
    universe = m.universe
    result = TrialResult(index=index, seed=seed, fixture='closed-model', passed=True,
                         details={'statements': len(m)})

    for a, b, c in disjoint_set_triples(universe.full):
        for label, holds in (
            ('totally_independent', lambda x, y: totally_independent_sets(m, x, y)),
            ('totally_uncoupled',
             lambda x, y: totally_uncoupled_sets(m, x, y, ctx.uncoupled_max_variables).uncoupled),
        ):
            if not (holds(a, b) and holds(a, c)):
                continue
            result.checks += 1
            if not holds(a, b | c):
                result.passed = False
                result.counterexample = {
                    'notion': label,
                    'A': _names(universe, a), 'B': _names(universe, b), 'C': _names(universe, c),
                    'statements': _model_statements(m),
                }
                return result
    return result


def run_lemma8(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """Unions of distinct components are marginally independent per the build oracle"""
    kind = 'gaussian-block' if index % 2 else 'spb-block-product'
    source = generate(kind, ctx.n, seed, ctx.generator_params())
    oracle = oracle_for(source)
    universe = source.universe
    order = [int(v) for v in make_rng(seed).permutation(ctx.n)]
    components = connected_components(build(oracle, order))

    result = TrialResult(index=index, seed=seed, fixture=kind, passed=True,
                         details={'components': [_names(universe, c) for c in components]})
    for a, b in component_unions(components):
        result.checks += 1
        if not oracle.independent(a, b, 0):
            result.passed = False
            result.counterexample = {'A': _names(universe, a), 'B': _names(universe, b),
                                     'ordering': [universe.names[i] for i in order]}
            break
    return result


def _pair_copy_trial(index: int, seed: int) -> TrialResult:
    p = named_example('pair-copy')
    oracle = oracle_for(p)
    a, b, c = (p.universe.index(name) for name in 'abc')
    observed = {
        'totally_independent_ab': totally_independent_pair(oracle, a, b),
        'totally_uncoupled_ab': totally_uncoupled_pair(oracle, a, b).uncoupled,
        'totally_disconnected_ab': totally_disconnected_pair(oracle, a, b).disconnected,
        'separable': is_separable(oracle).separable,
    }
    transitivity = is_transitive(oracle)
    observed['transitive'] = transitivity.transitive
    observed['transitivity_counterexample'] = (
        [p.universe.names[i] for i in transitivity.counterexample] if transitivity.counterexample else None
    )
    expected = {
        'totally_independent_ab': True,
        'totally_uncoupled_ab': False,
        'totally_disconnected_ab': False,
        'separable': False,
        'transitive': False,
        'transitivity_counterexample': ['a', 'c', 'b'],
    }
    return _expectation_trial(index, seed, 'pair-copy', observed, expected)


def _parity_trial(index: int, seed: int) -> TrialResult:
    p = named_example('parity')
    oracle = oracle_for(p)
    a, b, c = (bit(p.universe.index(name)) for name in 'abc')
    observed = {
        'independent_c_a': oracle.independent(c, a, 0),
        'independent_c_b': oracle.independent(c, b, 0),
        'independent_c_ab': oracle.independent(c, a | b, 0),
    }
    expected = {'independent_c_a': True, 'independent_c_b': True, 'independent_c_ab': False}
    return _expectation_trial(index, seed, 'parity', observed, expected)


def _expectation_trial(index: int, seed: int, fixture: str,
                       observed: Dict[str, object], expected: Dict[str, object]) -> TrialResult:
    differing = {key: {'expected': value, 'observed': observed[key]}
                 for key, value in expected.items() if observed[key] != value}
    return TrialResult(
        index=index, seed=seed, fixture=fixture, passed=not differing, checks=len(expected),
        counterexample=differing or None, details=observed,
    )


def run_counterexamples(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """The pair-copy and parity anomalies are reproduced"""
    if index == 0:
        return _pair_copy_trial(index, seed)
    return _parity_trial(index, seed)


def run_unification(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """Conditional covariances do not depend on the conditioning values"""
    kind, g = gaussian_fixture(ctx.n, seed, index, ctx.generator_params())
    report = check_unification(g, ctx.unification_grid, ctx.tolerance, max_conditioning=None)
    return TrialResult(
        index=index, seed=seed, fixture=kind, passed=report.passed, checks=report.checked,
        counterexample=report.violation,
        details={'max_deviation': report.max_deviation},
    )


def run_simnet(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """
    discriminates iff relevant, for every symptom and similarity edge, and
    an acyclic composed network; odd trials add a chord to the path graph
    """
    p = similarity_fixture(seed, max_weight=ctx.max_weight)
    h = p.universe.index('h')
    values = tuple(p.domain(h))
    edges = list(zip(values, values[1:]))
    if index % 2 and len(values) > 2:
        edges.append((values[0], values[-1]))
    graph = SimilarityGraph.create('h', values, edges)

    validation = check_query_equivalence(p, graph, max_variables=ctx.discrimination_max_variables)
    result = TrialResult(
        index=index, seed=seed, fixture=f"similarity-{len(values)}x{p.universe.size - 1}",
        passed=validation.passed and validation.strictly_positive,
        checks=validation.checked,
        details={'relevant_symptoms': validation.relevant,
                 'global_edges': len(validation.global_network.edges())},
    )
    if not result.passed:
        result.counterexample = {
            'mismatches': validation.mismatches,
            'route_disagreements': validation.route_disagreements,
            'graph': graph.to_dict(),
            'strictly_positive': validation.strictly_positive,
        }
    return result


def run_conjecture_binary(ctx: SuiteContext, index: int, seed: int) -> TrialResult:
    """Propositional transitivity on binary distributions with zero cells"""
    kind, p = sparse_fixture(ctx.n, seed, ctx.generator_params())
    result = _proptrans_trial(p, kind, ctx, index, seed)
    result.details = {'strictly_positive': p.is_strictly_positive}
    return result


SUITES: Dict[str, Suite] = {
    suite.name: suite for suite in (
        Suite('thm1', run_thm1, "separable iff transitive on closed models"),
        Suite('thm3', run_thm3, "components identical under every ordering"),
        Suite('thm4', run_thm4, "totally disconnected iff totally uncoupled"),
        Suite('thm5-spb', run_thm5_spb, "propositional transitivity, strictly positive binary",
              min_variables=3),
        Suite('thm5-gauss', run_thm5_gauss, "propositional transitivity, regular Gaussian",
              default_tolerance=GAUSSIAN_AXIOM_TOLERANCE, min_variables=3),
        Suite('thm6', run_thm6, "propositional transitivity implies separability",
              default_tolerance=GAUSSIAN_AXIOM_TOLERANCE, min_variables=3),
        Suite('thm7', run_thm7, "d-separation soundness and trail-enumeration agreement"),
        Suite('lemma2', run_lemma2, "composition of total independence and uncoupledness",
              min_variables=3),
        Suite('lemma8', run_lemma8, "components are marginally independent"),
        Suite('counterexamples', run_counterexamples, "pair-copy and parity anomalies",
              fixed_trials=2, min_variables=1),
        Suite('unification', run_unification, "conditional covariance value invariance"),
        Suite('simnet', run_simnet, "similarity network query equivalence", min_variables=1),
        Suite('conjecture-binary', run_conjecture_binary,
              "propositional transitivity with zero cells (exploratory)",
              min_variables=3, exploratory=True),
    )
}


def get_suite(name: str, exploratory: bool = False) -> Suite:
    """
    Look up a suite by name

    Raises:
        InputError: unknown suite, or an exploratory suite without the flag
    """
    suite = SUITES.get(name)
    if suite is None:
        raise InputError(f"unknown suite '{name}' (choose from {', '.join(SUITES)})", field="suite")
    if suite.exploratory and not exploratory:
        raise InputError(f"suite '{name}' is exploratory; pass --exploratory to run it", field="suite")
    return suite
