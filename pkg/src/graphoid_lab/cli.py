"""
Command-line interface for Graphoid Lab

Exit codes: 0 when the reported property holds, 1 when it is violated (the
counterexample is printed as JSON), 2 for input and usage errors, 99 for
unexpected failures.
"""

import functools
import sys
import traceback
from typing import Dict, Optional, Tuple, Union

import click

from . import __version__
from .analysis.unrelatedness import analyze_model, is_separable, is_transitive, pair_verdict
from .config.manager import ConfigManager
from .distributions.gaussian import GaussianModel
from .distributions.generators import KINDS, generate
from .distributions.oracles import induced_model, oracle_for
from .distributions.tabular import TabularDistribution
from .experiments.models import ExperimentConfig
from .experiments.runner import CAP_KEYS, ExperimentRunner
from .experiments.suites import SUITES
from .formats.loader import (
    distribution_to_dict,
    dump_json,
    load_distribution,
    load_model,
    load_network,
    load_similarity_graph,
    load_source,
    model_to_dict,
)
from .graphoid.model import DependencyModel, close, is_closed
from .graphoid.universe import Universe, VarSet, bit
from .instantiated.axioms import (
    check_propositional_transitivity,
    check_propositional_transitivity_all,
    check_unification,
)
from .instantiated.model import InstantiatedModel, InstantiatedTriplet, induced_uninstantiated
from .network.belief import BeliefNetwork, build, connected_components, minimal_parent_sets, resolve_ordering
from .network.dot import export_dot
from .network.dseparation import d_separated, enumerate_active_trails
from .report.formatter import ReportFormatter
from .simnet.similarity import build_locals, check_query_equivalence, compose_global
from .utils.exceptions import ConfigurationError, GraphoidLabError, InputError
from .utils.logging import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_HOLDS = 0
EXIT_VIOLATED = 1
EXIT_UNEXPECTED = 99

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


@click.group()
@click.version_option(version=__version__)
@click.option('--config', '-c', type=click.Path(dir_okay=False), help='Configuration file path')
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging')
@click.option('--quiet', '-q', is_flag=True, help='Suppress output except errors')
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False),
              help='Logging level (overrides the configuration)')
@click.option('--json', 'json_only', is_flag=True, help='JSON on stdout only, no summary tables')
@click.pass_context
def main(ctx, config, verbose, quiet, log_level, json_only):
    """Graphoids, belief networks and the unrelatedness notions"""

    ctx.ensure_object(dict)

    ctx.obj['config_path'] = config
    ctx.obj['verbose'] = verbose
    ctx.obj['quiet'] = quiet
    ctx.obj['log_level'] = log_level.upper() if log_level else None
    ctx.obj['json_only'] = json_only

    # Reconfigured once the configuration is loaded
    setup_logging({'level': _log_level(ctx.obj, 'WARNING')})


def _log_level(options: dict, configured: str) -> str:
    """--verbose and --quiet win over --log-level, which wins over the configuration"""
    if options.get('verbose'):
        return 'DEBUG'
    if options.get('quiet'):
        return 'ERROR'
    return options.get('log_level') or configured


def _load_config(ctx) -> ConfigManager:
    """Load configuration and apply its logging section"""
    try:
        config = ConfigManager(ctx.obj.get('config_path'))
    except GraphoidLabError:
        raise
    except Exception as e:
        raise ConfigurationError(str(e)) from e

    logging_config = dict(config.get('logging', {}))
    logging_config['level'] = _log_level(ctx.obj, logging_config.get('level', 'WARNING'))
    setup_logging(logging_config)
    return config


def command_runner(func):
    """
    Run a command body that returns an exit code and map errors onto the
    exit-code contract
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            code = func(*args, **kwargs)
        except GraphoidLabError as e:
            logger.error(str(e))
            if ctx.obj.get('verbose'):
                traceback.print_exc()
            sys.exit(e.exit_code)
        except Exception as e:
            logger.error(f"Unexpected error: {e}")
            if ctx.obj.get('verbose'):
                traceback.print_exc()
            sys.exit(EXIT_UNEXPECTED)
        sys.exit(code or EXIT_HOLDS)

    return wrapper


def _setup(ctx) -> Tuple[ConfigManager, ReportFormatter]:
    config = _load_config(ctx)
    return config, ReportFormatter(config, json_only=ctx.obj.get('json_only', False))


def _emit(formatter: ReportFormatter, data) -> None:
    click.echo(formatter.emit(data))


Source = Union[DependencyModel, TabularDistribution, GaussianModel]


def _source(model: Optional[str], dist: Optional[str], tolerance: Optional[float] = None) -> Source:
    """Exactly one of --model / --dist, checked against what the file holds"""
    if bool(model) == bool(dist):
        raise InputError("give exactly one of --model and --dist", field="source")
    source = load_source(model or dist)
    if model and not isinstance(source, DependencyModel):
        raise InputError(f"{model} holds a distribution; pass it with --dist", field="model")
    if dist and isinstance(source, DependencyModel):
        raise InputError(f"{dist} holds a dependency model; pass it with --model", field="dist")
    return _with_tolerance(source, tolerance)


def _with_tolerance(source: Source, tolerance: Optional[float]) -> Source:
    """Apply --tolerance to a Gaussian source; other sources are exact"""
    if tolerance is None:
        return source
    if isinstance(source, GaussianModel):
        return source.with_tolerance(tolerance)
    logger.warning("--tolerance only affects Gaussian distributions; ignored")
    return source


def _ordering(universe: Universe, order: Optional[str]):
    if not order:
        return tuple(range(universe.size))
    return resolve_ordering(universe, order)


def _sets(universe: Universe, x: str, y: str, z: Optional[str]) -> Tuple[VarSet, VarSet, VarSet]:
    return universe.parse(x), universe.parse(y), universe.parse(z or '')


def _assignment(universe: Universe, text: str) -> Dict[int, str]:
    """Parse "c=1,d=0" into {index: value}"""
    values: Dict[int, str] = {}
    for part in text.split(','):
        if not part.strip():
            continue
        if '=' not in part:
            raise InputError(f"expected name=value, got '{part}'", field="at")
        name, value = part.split('=', 1)
        values[universe.index(name.strip())] = value.strip()
    return values


def _triplet_dict(universe: Universe, x: VarSet, y: VarSet, z: VarSet) -> dict:
    return {'X': universe.names_of(x), 'Y': universe.names_of(y), 'Z': universe.names_of(z)}


source_options = [
    click.option('--model', type=click.Path(exists=True, dir_okay=False), help='Dependency model JSON'),
    click.option('--dist', type=click.Path(exists=True, dir_okay=False), help='Distribution JSON'),
    click.option('--tolerance', type=float, help='Gaussian zero tolerance'),
]


def with_source(func):
    for option in reversed(source_options):
        func = option(func)
    return func


# ---------------------------------------------------------------- model

@main.group()
def model():
    """Dependency models: closure and closure checks"""


@model.command('close')
@click.option('--model', 'model_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Dependency model JSON')
@click.option('--out', type=click.Path(dir_okay=False), help='Also write the closed model here')
@click.pass_context
@command_runner
def model_close(ctx, model_path, out):
    """Close a model under the graphoid axioms"""
    config, formatter = _setup(ctx)
    m = load_model(model_path)
    closed = close(m, config.get('limits.closure_max_variables', 10))
    data = model_to_dict(closed)
    if out:
        dump_json(data, out)
    _emit(formatter, data)
    formatter.verdict("Closure", True, {"Statements": len(m), "Closed statements": len(closed)})
    return EXIT_HOLDS


@model.command('check')
@click.option('--model', 'model_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Dependency model JSON')
@click.pass_context
@command_runner
def model_check(ctx, model_path):
    """Check closure; report the violated axiom and its premises"""
    _, formatter = _setup(ctx)
    m = load_model(model_path)
    check = is_closed(m)
    _emit(formatter, check.to_dict(m.universe))
    formatter.verdict("Closed under the axioms", check.closed,
                      {} if check.closed else {"Axiom": check.axiom})
    return EXIT_HOLDS if check.closed else EXIT_VIOLATED


@model.command('induce')
@click.option('--dist', 'dist_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Distribution JSON')
@click.option('--value-level', is_flag=True,
              help='Keep a triplet only when every instantiation with positive mass holds')
@click.option('--tolerance', type=float, help='Gaussian zero tolerance')
@click.option('--out', type=click.Path(dir_okay=False), help='Also write the model here')
@click.pass_context
@command_runner
def model_induce(ctx, dist_path, value_level, tolerance, out):
    """Dependency model of every triplet a distribution affirms"""
    config, formatter = _setup(ctx)
    p = _with_tolerance(load_distribution(dist_path), tolerance)
    cap = config.get('limits.induced_max_variables', 6)
    if value_level:
        m = induced_uninstantiated(InstantiatedModel(p), cap)
    else:
        m = induced_model(oracle_for(p), cap)
    data = model_to_dict(m)
    if out:
        dump_json(data, out)
    _emit(formatter, data)
    formatter.verdict("Closed under the axioms", m.closed, {"Statements": len(m)})
    return EXIT_HOLDS if m.closed else EXIT_VIOLATED


# ---------------------------------------------------------------- dist

@main.group()
def dist():
    """Distributions: generation and independence queries"""


@dist.command('gen')
@click.option('--kind', required=True, type=click.Choice(KINDS), help='Generator kind')
@click.option('--n', 'n', default=3, show_default=True, type=int, help='Variable count')
@click.option('--seed', default=0, show_default=True, type=int, help='Integer seed')
@click.option('--name', help='Named example (for --kind named-example)')
@click.option('--blocks', help='Independent blocks, e.g. "a,b|c,d"')
@click.option('--max-weight', type=int, help='Largest cell weight')
@click.option('--epsilon', type=float, help='Ridge for Gaussian covariances')
@click.option('--tolerance', type=float, help='Gaussian zero tolerance')
@click.option('--zero-fraction', type=float, help='Zero cells in binary-sparse fixtures')
@click.option('--out', type=click.Path(dir_okay=False), help='Also write the distribution here')
@click.pass_context
@command_runner
def dist_gen(ctx, kind, n, seed, name, blocks, max_weight, epsilon, tolerance, zero_fraction, out):
    """Generate a seeded fixture distribution"""
    config, formatter = _setup(ctx)
    params = {
        'max_weight': max_weight or config.get('generators.max_weight'),
        'epsilon': epsilon if epsilon is not None else config.get('generators.gaussian_epsilon'),
        'tolerance': tolerance if tolerance is not None else config.get('numerics.gaussian_tolerance'),
        'zero_fraction': (zero_fraction if zero_fraction is not None
                          else config.get('generators.sparse_zero_fraction')),
        'blocks': blocks,
        'name': name,
        'scheme': config.get('generators.scheme'),
    }
    params = {key: value for key, value in params.items() if value is not None}
    data = distribution_to_dict(generate(kind, n, seed, params))
    if out:
        dump_json(data, out)
    _emit(formatter, data)
    return EXIT_HOLDS


@dist.command('indep')
@click.option('--dist', 'dist_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Distribution JSON')
@click.option('--x', 'x', required=True, help='X variables, comma separated')
@click.option('--y', 'y', required=True, help='Y variables, comma separated')
@click.option('--z', 'z', default='', help='Z variables, comma separated')
@click.option('--at', help='Values of Z ("c=1"), or of X, Y and Z for a single instantiation')
@click.option('--tolerance', type=float, help='Gaussian zero tolerance')
@click.pass_context
@command_runner
def dist_indep(ctx, dist_path, x, y, z, at, tolerance):
    """Is X independent of Y given Z"""
    _, formatter = _setup(ctx)
    p = _with_tolerance(load_distribution(dist_path), tolerance)
    universe = p.universe
    xs, ys, zs = _sets(universe, x, y, z)

    data = _triplet_dict(universe, xs, ys, zs)
    if at:
        values = _assignment(universe, at)
        assigned = 0
        for index in values:
            assigned |= bit(index)
        m = InstantiatedModel(p)
        if assigned == xs | ys | zs:
            holds = m.query(InstantiatedTriplet(xs, ys, zs, values))
        elif assigned == zs:
            holds = m.independent_at(xs, ys, zs, values)
        else:
            raise InputError("--at must assign exactly Z, or all of X, Y and Z", field="at")
        data['at'] = {universe.names[i]: v for i, v in sorted(values.items())}
    else:
        holds = oracle_for(p).independent(xs, ys, zs)
    data['independent'] = holds
    _emit(formatter, data)
    formatter.verdict("Independent", holds)
    return EXIT_HOLDS if holds else EXIT_VIOLATED


# ---------------------------------------------------------------- bn

@main.group()
def bn():
    """Belief networks: construction, d-separation, components, DOT"""


def _network(network_path: Optional[str], model_path: Optional[str],
             dist_path: Optional[str], order: Optional[str]) -> BeliefNetwork:
    if network_path:
        if model_path or dist_path:
            raise InputError("--network cannot be combined with --model or --dist", field="source")
        return load_network(network_path)
    source = _source(model_path, dist_path)
    return build(oracle_for(source), _ordering(source.universe, order))


network_options = [
    click.option('--network', 'network_path', type=click.Path(exists=True, dir_okay=False),
                 help='Network JSON'),
    click.option('--model', 'model_path', type=click.Path(exists=True, dir_okay=False),
                 help='Dependency model JSON'),
    click.option('--dist', 'dist_path', type=click.Path(exists=True, dir_okay=False),
                 help='Distribution JSON'),
    click.option('--order', help='Construction ordering, e.g. "a,b,c"'),
]


def with_network(func):
    for option in reversed(network_options):
        func = option(func)
    return func


@bn.command('build')
@click.option('--model', 'model_path', type=click.Path(exists=True, dir_okay=False),
              help='Dependency model JSON')
@click.option('--dist', 'dist_path', type=click.Path(exists=True, dir_okay=False),
              help='Distribution JSON')
@click.option('--order', help='Construction ordering, e.g. "a,b,c"')
@click.option('--dot', is_flag=True, help='Print DOT instead of JSON')
@click.option('--audit-parents', is_flag=True, help='List every minimal parent set')
@click.option('--out', type=click.Path(dir_okay=False), help='Also write the network JSON here')
@click.pass_context
@command_runner
def bn_build(ctx, model_path, dist_path, order, dot, audit_parents, out):
    """Build a belief network under an ordering"""
    config, formatter = _setup(ctx)
    source = _source(model_path, dist_path)
    oracle = oracle_for(source)
    net = build(oracle, _ordering(source.universe, order))
    data = net.to_dict()

    if audit_parents:
        universe = net.universe
        audit = {}
        predecessors = 0
        for u in net.ordering:
            sets = minimal_parent_sets(oracle, u, predecessors)
            audit[universe.names[u]] = [universe.names_of(s) for s in sets]
            if len(sets) > 1:
                logger.warning(f"'{universe.names[u]}' has {len(sets)} minimal parent sets; "
                               f"the first is used")
            predecessors |= bit(u)
        data['parent_sets'] = audit

    if out:
        dump_json(data, out)
    if dot:
        click.echo(export_dot(net))
    else:
        _emit(formatter, data)
    formatter.network_table(net.node_names(), data['parents'], "Belief network")
    return EXIT_HOLDS


@bn.command('dsep')
@with_network
@click.option('--x', 'x', required=True, help='X variables, comma separated')
@click.option('--y', 'y', required=True, help='Y variables, comma separated')
@click.option('--z', 'z', default='', help='Z variables, comma separated')
@click.option('--trails', is_flag=True, help='Also list the active trails')
@click.option('--cap', type=int, help='Trail enumeration cap')
@click.pass_context
@command_runner
def bn_dsep(ctx, network_path, model_path, dist_path, order, x, y, z, trails, cap):
    """Is X d-separated from Y by Z"""
    config, formatter = _setup(ctx)
    net = _network(network_path, model_path, dist_path, order)
    universe = net.universe
    xs, ys, zs = _sets(universe, x, y, z)

    separated = d_separated(net, xs, ys, zs)
    data = {**_triplet_dict(universe, xs, ys, zs), 'd_separated': separated}
    if trails:
        found = enumerate_active_trails(net, xs, ys, zs, cap or config.get('limits.trail_cap', 1_000_000))
        data['active_trails'] = [trail.render(universe) for trail in found]
    _emit(formatter, data)
    formatter.verdict("d-separated", separated)
    return EXIT_HOLDS if separated else EXIT_VIOLATED


@bn.command('components')
@with_network
@click.pass_context
@command_runner
def bn_components(ctx, network_path, model_path, dist_path, order):
    """Connected components of a network"""
    _, formatter = _setup(ctx)
    net = _network(network_path, model_path, dist_path, order)
    components = [net.universe.names_of(c) for c in connected_components(net)]
    _emit(formatter, {'components': components})
    formatter.verdict("Components", True, {str(i + 1): ", ".join(c) for i, c in enumerate(components)})
    return EXIT_HOLDS


@bn.command('dot')
@with_network
@click.option('--name', default='network', show_default=True, help='Graph name')
@click.pass_context
@command_runner
def bn_dot(ctx, network_path, model_path, dist_path, order, name):
    """DOT export of a network"""
    _setup(ctx)
    net = _network(network_path, model_path, dist_path, order)
    click.echo(export_dot(net, name))
    return EXIT_HOLDS


# ---------------------------------------------------------------- analyze

@main.group()
def analyze():
    """Unrelatedness: pair verdicts, separability, transitivity"""


@analyze.command('pair')
@with_source
@click.option('--a', 'a', required=True, help='First variable')
@click.option('--b', 'b', required=True, help='Second variable')
@click.option('--cap', type=int, help='Universe size cap for the uncoupledness scan')
@click.pass_context
@command_runner
def analyze_pair(ctx, model, dist, tolerance, a, b, cap):
    """Total independence, uncoupledness and disconnectedness of a pair"""
    config, formatter = _setup(ctx)
    oracle = oracle_for(_source(model, dist, tolerance))
    universe = oracle.universe
    verdict = pair_verdict(oracle, universe.index(a), universe.index(b),
                           cap or config.get('limits.uncoupled_max_variables', 12))
    _emit(formatter, verdict.to_dict(universe))
    consistent = verdict.totally_uncoupled == verdict.totally_disconnected
    formatter.verdict(f"Pair ({a}, {b})", consistent, {
        "Totally independent": verdict.totally_independent,
        "Totally uncoupled": verdict.totally_uncoupled,
        "Totally disconnected": verdict.totally_disconnected,
    })
    return EXIT_HOLDS if consistent else EXIT_VIOLATED


@analyze.command('separability')
@with_source
@click.option('--cap', type=int, help='Universe size cap for the uncoupledness scan')
@click.pass_context
@command_runner
def analyze_separability(ctx, model, dist, tolerance, cap):
    """Every totally independent pair is totally uncoupled"""
    config, formatter = _setup(ctx)
    oracle = oracle_for(_source(model, dist, tolerance))
    check = is_separable(oracle, cap or config.get('limits.uncoupled_max_variables', 12))
    _emit(formatter, check.to_dict(oracle.universe))
    formatter.verdict("Separable", check.separable)
    return EXIT_HOLDS if check.separable else EXIT_VIOLATED


@analyze.command('transitivity')
@with_source
@click.pass_context
@command_runner
def analyze_transitivity(ctx, model, dist, tolerance):
    """Interaction is transitive"""
    _, formatter = _setup(ctx)
    oracle = oracle_for(_source(model, dist, tolerance))
    check = is_transitive(oracle)
    _emit(formatter, check.to_dict(oracle.universe))
    formatter.verdict("Transitive", check.transitive)
    return EXIT_HOLDS if check.transitive else EXIT_VIOLATED


@analyze.command('model')
@with_source
@click.option('--networks', is_flag=True, help='Include the network built for each pair')
@click.option('--cap', type=int, help='Universe size cap for the uncoupledness scan')
@click.pass_context
@command_runner
def analyze_all(ctx, model, dist, tolerance, networks, cap):
    """Verdicts for every pair plus the model flags"""
    config, formatter = _setup(ctx)
    oracle = oracle_for(_source(model, dist, tolerance))
    analysis = analyze_model(oracle, cap or config.get('limits.uncoupled_max_variables', 12), networks)
    _emit(formatter, analysis.to_dict())
    formatter.analysis_table(analysis)
    consistent = all(v.totally_uncoupled == v.totally_disconnected for v in analysis.verdicts)
    return EXIT_HOLDS if consistent else EXIT_VIOLATED


# ---------------------------------------------------------------- axiom

@main.group()
def axiom():
    """Axiom checks on instantiated models"""


@axiom.command('proptrans')
@click.option('--dist', 'dist_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Distribution JSON')
@click.option('--a', 'a', help='Variable in A1 (default: every pair)')
@click.option('--b', 'b', help='Variable in B1 (default: every pair)')
@click.option('--partial', is_flag=True, help='Let variables stay out of every cell')
@click.option('--cap', type=int, help='Universe size cap')
@click.pass_context
@command_runner
def axiom_proptrans(ctx, dist_path, a, b, partial, cap):
    """Propositional transitivity scan"""
    config, formatter = _setup(ctx)
    m = InstantiatedModel(load_distribution(dist_path))
    max_variables = cap or config.get('limits.proptrans_max_variables', 6)
    if bool(a) != bool(b):
        raise InputError("give both --a and --b, or neither", field="pair")
    if a:
        report = check_propositional_transitivity(m, m.universe.index(a), m.universe.index(b),
                                                  max_variables, partial)
    else:
        report = check_propositional_transitivity_all(m, max_variables, partial)
    _emit(formatter, report.to_dict())
    formatter.verdict("Propositional transitivity", report.passed, {
        "Instances": report.checked_instances,
        "Antecedent hits": report.antecedent_hits,
        "Skipped": report.skipped_instances,
    })
    return EXIT_HOLDS if report.passed else EXIT_VIOLATED


@axiom.command('unification')
@click.option('--dist', 'dist_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Gaussian distribution JSON')
@click.option('--grid', help='Conditioning values, e.g. "-1,0,5"')
@click.option('--tolerance', type=float, help='Entrywise bound')
@click.option('--max-conditioning', type=int, help='Largest conditioning set tried')
@click.pass_context
@command_runner
def axiom_unification(ctx, dist_path, grid, tolerance, max_conditioning):
    """Conditional covariance does not depend on the conditioning values"""
    config, formatter = _setup(ctx)
    g = load_distribution(dist_path)
    if isinstance(g, TabularDistribution):
        raise InputError("unification applies to Gaussian distributions", field="dist")
    if grid:
        try:
            values = [float(v) for v in grid.split(',') if v.strip()]
        except ValueError:
            raise InputError(f"bad grid '{grid}'", field="grid") from None
    else:
        values = config.get('numerics.unification_grid', [-1.0, 0.0, 5.0])
    report = check_unification(g, values, tolerance, max_conditioning)
    _emit(formatter, report.to_dict())
    formatter.verdict("Unification", report.passed, {"Conditionals": report.checked,
                                                     "Max deviation": report.max_deviation})
    return EXIT_HOLDS if report.passed else EXIT_VIOLATED


# ---------------------------------------------------------------- simnet

@main.group()
def simnet():
    """Similarity networks: composition and query equivalence"""


@simnet.command('compose')
@click.option('--dist', 'dist_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Tabular distribution JSON')
@click.option('--graph', 'graph_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Similarity graph JSON')
@click.option('--order', help='Shared symptom ordering, e.g. "s1,s2,s3"')
@click.option('--dot', is_flag=True, help='Print DOT instead of JSON')
@click.pass_context
@command_runner
def simnet_compose(ctx, dist_path, graph_path, order, dot):
    """Compose the global network from the local networks"""
    _, formatter = _setup(ctx)
    p, graph = _simnet_inputs(dist_path, graph_path)
    composed = compose_global(build_locals(p, graph, _symptom_order(order)))
    if dot:
        click.echo(export_dot(composed, 'global', highlight=[graph.hypothesis]))
    else:
        _emit(formatter, composed.to_dict())
    return EXIT_HOLDS


@simnet.command('validate')
@click.option('--dist', 'dist_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Tabular distribution JSON')
@click.option('--graph', 'graph_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Similarity graph JSON')
@click.option('--order', help='Shared symptom ordering, e.g. "s1,s2,s3"')
@click.pass_context
@command_runner
def simnet_validate(ctx, dist_path, graph_path, order):
    """discriminates iff connected to the hypothesis, for every symptom and edge"""
    config, formatter = _setup(ctx)
    p, graph = _simnet_inputs(dist_path, graph_path)
    validation = check_query_equivalence(p, graph, _symptom_order(order),
                                         config.get('limits.discrimination_max_variables', 8))
    _emit(formatter, validation.to_dict())
    formatter.verdict("Query equivalence", validation.passed, {
        "Checked": validation.checked,
        "Strictly positive": validation.strictly_positive,
    })
    return EXIT_HOLDS if validation.passed else EXIT_VIOLATED


def _simnet_inputs(dist_path: str, graph_path: str):
    p = load_distribution(dist_path)
    if not isinstance(p, TabularDistribution):
        raise InputError("similarity networks need a tabular distribution", field="dist")
    return p, load_similarity_graph(graph_path)


def _symptom_order(order: Optional[str]):
    if not order:
        return None
    return [part.strip() for part in order.split(',') if part.strip()]


# ---------------------------------------------------------------- experiment

@main.group()
def experiment():
    """Seeded verification suites"""


def _parse_caps(values) -> Dict[str, int]:
    caps = {}
    for item in values:
        key, sep, value = item.partition('=')
        if not sep:
            raise InputError(f"expected KEY=VALUE, got '{item}'", field="cap")
        try:
            caps[key.strip()] = int(value)
        except ValueError:
            raise InputError(f"cap '{key}' needs an integer value", field="cap") from None
    return caps


@experiment.command('run')
@click.option('--suite', required=True, type=click.Choice(list(SUITES)), help='Suite name')
@click.option('--n', 'n', default=5, show_default=True, type=int, help='Variable count')
@click.option('--trials', default=20, show_default=True, type=int, help='Trial count')
@click.option('--seed', default=1, show_default=True, type=int, help='Integer seed')
@click.option('--tolerance', type=float, help='Gaussian tolerance')
@click.option('--orderings', type=int, help='Sampled orderings above full enumeration')
@click.option('--cap', 'caps', multiple=True, help=f"Cap override KEY=VALUE ({', '.join(CAP_KEYS)})")
@click.option('--exploratory', is_flag=True, help='Allow exploratory suites')
@click.option('--timing', is_flag=True, help='Include wall time in the JSON report')
@click.pass_context
@command_runner
def experiment_run(ctx, suite, n, trials, seed, tolerance, orderings, caps, exploratory, timing):
    """Run a verification suite"""
    config, formatter = _setup(ctx)
    cfg = ExperimentConfig(
        suite=suite, n=n, trials=trials, seed=seed, tolerance=tolerance,
        orderings=orderings, caps=_parse_caps(caps), exploratory=exploratory,
    )
    report = ExperimentRunner(config).run(cfg)
    _emit(formatter, report.to_dict(include_timing=timing))
    formatter.experiment_table(report)
    if report.exploratory:
        return EXIT_HOLDS
    return EXIT_HOLDS if report.passed else EXIT_VIOLATED


if __name__ == '__main__':
    main()
