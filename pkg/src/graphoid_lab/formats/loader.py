"""
JSON loading and saving for Graphoid Lab
"""

import json
from contextlib import contextmanager
from fractions import Fraction
from math import prod
from pathlib import Path
from typing import Any, Dict, Iterator, Optional, Union

from jsonschema import ValidationError as JsonSchemaValidationError
from jsonschema import validate

from ..distributions.gaussian import DEFAULT_TOLERANCE, GaussianModel
from ..distributions.tabular import TabularDistribution, Variable
from ..graphoid.model import DependencyModel, is_closed
from ..graphoid.triplet import Triplet
from ..graphoid.universe import Universe, bit, members
from ..network.belief import BeliefNetwork, resolve_ordering
from ..simnet.similarity import SimilarityGraph
from ..utils.exceptions import GraphoidLabError, ModelLoadError
from ..utils.logging import get_logger
from .schemas import SCHEMAS

logger = get_logger(__name__)

PathLike = Union[str, Path]
Distribution = Union[TabularDistribution, GaussianModel]


def read_json(path: PathLike) -> Dict[str, Any]:
    """
    Read a JSON object from disk

    Raises:
        ModelLoadError: unreadable file, invalid JSON or a non-object document
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except OSError as e:
        raise ModelLoadError(str(e), path=str(path)) from e
    except json.JSONDecodeError as e:
        raise ModelLoadError(f"invalid JSON: {e}", path=str(path)) from e

    if not isinstance(data, dict):
        raise ModelLoadError("top-level JSON value must be an object", path=str(path))
    return data


def dump_json(data: Any, path: Optional[PathLike] = None) -> str:
    """Serialize with sorted keys and two-space indent; also write to path if given"""
    text = json.dumps(data, indent=2, sort_keys=True)
    if path is not None:
        Path(path).write_text(text + '\n', encoding='utf-8')
        logger.debug(f"Wrote {path}")
    return text


def detect_kind(data: Dict[str, Any]) -> str:
    """Which interchange format a document is in"""
    if data.get('type') in ('tabular', 'gaussian', 'model'):
        return data['type']
    if 'statements' in data:
        return 'model'
    if 'hypothesis' in data:
        return 'similarity'
    if 'parents' in data:
        return 'network'
    raise ModelLoadError("cannot tell what kind of document this is")


def _check_schema(data: Dict[str, Any], kind: str, path: Optional[str]) -> None:
    try:
        validate(instance=data, schema=SCHEMAS[kind])
    except JsonSchemaValidationError as e:
        location = '.'.join(str(p) for p in e.absolute_path)
        where = f" at {location}" if location else ""
        raise ModelLoadError(f"schema validation error{where}: {e.message}", path=path) from None


@contextmanager
def _load_errors(path: Optional[str]) -> Iterator[None]:
    """Turn library errors raised while building a model into load errors"""
    try:
        yield
    except ModelLoadError:
        raise
    except GraphoidLabError as e:
        raise ModelLoadError(str(e), path=path) from e


def parse_model(data: Dict[str, Any], path: Optional[str] = None) -> DependencyModel:
    """DependencyModel from {"variables": [...], "statements": [{"X":..,"Y":..,"Z":..}]}"""
    _check_schema(data, 'model', path)
    with _load_errors(path):
        universe = Universe(data['variables'])
        statements = [
            Triplet(universe.varset(s['X']), universe.varset(s['Y']), universe.varset(s.get('Z', [])))
            for s in data['statements']
        ]
        m = DependencyModel.from_statements(universe, statements)
    if data.get('closed', False):
        check = is_closed(m)
        if not check.closed:
            logger.warning(
                f"Model{' in ' + path if path else ''} is marked closed but "
                f"{check.axiom} derives a missing statement; treating it as a seed"
            )
            return m
        m = DependencyModel.from_statements(universe, statements, closed=True)
    return m


def _rational(value: Union[str, int], path: Optional[str]) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ModelLoadError(f"bad probability '{value}': {e}", path=path) from None


def parse_tabular(data: Dict[str, Any], path: Optional[str] = None) -> TabularDistribution:
    """
    Tabular distribution; the cells must cover the full product space
    exactly once
    """
    _check_schema(data, 'tabular', path)
    with _load_errors(path):
        variables = [Variable(v['name'], tuple(v.get('domain', ('0', '1')))) for v in data['variables']]
        names = [v.name for v in variables]
        Universe(names)

        table: Dict[tuple, Fraction] = {}
        for cell in data['cells']:
            assign = cell['assign']
            if set(assign) != set(names):
                missing = sorted(set(names) - set(assign))
                extra = sorted(set(assign) - set(names))
                raise ModelLoadError(
                    f"cell {assign} must assign exactly {names} (missing {missing}, unknown {extra})",
                    path=path,
                )
            key = tuple(assign[name] for name in names)
            if key in table:
                raise ModelLoadError(f"cell {assign} appears more than once", path=path)
            table[key] = _rational(cell['p'], path)

        expected = prod(len(v.domain) for v in variables)
        if len(table) != expected:
            raise ModelLoadError(
                f"cells cover {len(table)} of {expected} points of the product space", path=path
            )
        return TabularDistribution(variables, table)


def parse_gaussian(data: Dict[str, Any], path: Optional[str] = None) -> GaussianModel:
    _check_schema(data, 'gaussian', path)
    with _load_errors(path):
        return GaussianModel(
            data['variables'],
            data['mean'],
            data['covariance'],
            tolerance=data.get('tolerance', DEFAULT_TOLERANCE),
        )


def parse_network(data: Dict[str, Any], path: Optional[str] = None) -> BeliefNetwork:
    """
    Belief network from {"variables", "ordering", "parents"}; every parent
    must precede its child in the ordering
    """
    _check_schema(data, 'network', path)
    with _load_errors(path):
        universe = Universe(data['variables'])
        edges = [(parent, child) for child, parents in data['parents'].items() for parent in parents]
        if 'ordering' not in data:
            return BeliefNetwork.from_edges(universe, edges)

        ordering = resolve_ordering(universe, data['ordering'])
        position = {v: i for i, v in enumerate(ordering)}
        parents = [0] * universe.size
        for parent, child in edges:
            p, c = universe.index(parent), universe.index(child)
            if position[p] >= position[c]:
                raise ModelLoadError(f"parent '{parent}' does not precede '{child}' in the ordering",
                                     path=path)
            parents[c] |= bit(p)
        return BeliefNetwork(universe=universe, ordering=ordering, parents=tuple(parents))


def parse_similarity_graph(data: Dict[str, Any], path: Optional[str] = None) -> SimilarityGraph:
    _check_schema(data, 'similarity', path)
    with _load_errors(path):
        return SimilarityGraph.create(data['hypothesis'], data['values'], data['edges'])


def load_model(path: PathLike) -> DependencyModel:
    return parse_model(read_json(path), str(path))


def load_distribution(path: PathLike) -> Distribution:
    """Tabular or Gaussian distribution, by the document's "type" field"""
    data = read_json(path)
    kind = data.get('type')
    if kind == 'tabular':
        return parse_tabular(data, str(path))
    if kind == 'gaussian':
        return parse_gaussian(data, str(path))
    raise ModelLoadError(f"expected \"type\" to be tabular or gaussian, got {kind!r}", path=str(path))


def load_network(path: PathLike) -> BeliefNetwork:
    return parse_network(read_json(path), str(path))


def load_similarity_graph(path: PathLike) -> SimilarityGraph:
    return parse_similarity_graph(read_json(path), str(path))


def load_source(path: PathLike) -> Union[DependencyModel, Distribution]:
    """Anything that can serve as an independence oracle: a model or a distribution"""
    data = read_json(path)
    try:
        kind = detect_kind(data)
    except ModelLoadError:
        raise ModelLoadError("not a dependency model or distribution", path=str(path)) from None
    parsers = {'model': parse_model, 'tabular': parse_tabular, 'gaussian': parse_gaussian}
    if kind not in parsers:
        raise ModelLoadError(f"a {kind} document cannot answer independence queries", path=str(path))
    logger.debug(f"Loading {kind} from {path}")
    return parsers[kind](data, str(path))


def model_to_dict(m: DependencyModel) -> Dict[str, Any]:
    return {
        'variables': list(m.universe.names),
        'statements': [t.to_dict(m.universe) for t in m.sorted_statements()],
        'closed': m.closed,
    }


def tabular_to_dict(p: TabularDistribution) -> Dict[str, Any]:
    """Interchange form with every cell of the product space, zeros included"""
    names = p.universe.names
    return {
        'type': 'tabular',
        'variables': [{'name': v.name, 'domain': list(v.domain)} for v in p.variables],
        'cells': [
            {'assign': dict(zip(names, key)), 'p': f"{value.numerator}/{value.denominator}"}
            for key, value in p.cells()
        ],
    }


def gaussian_to_dict(g: GaussianModel) -> Dict[str, Any]:
    return {
        'type': 'gaussian',
        'variables': list(g.universe.names),
        'mean': [float(x) for x in g.mean],
        'covariance': [[float(x) for x in row] for row in g.covariance],
        'tolerance': g.tolerance,
    }


def distribution_to_dict(d: Distribution) -> Dict[str, Any]:
    if isinstance(d, TabularDistribution):
        return tabular_to_dict(d)
    return gaussian_to_dict(d)


def network_to_dict(net: BeliefNetwork) -> Dict[str, Any]:
    names = net.universe.names
    return {
        'variables': list(names),
        'ordering': [names[i] for i in net.ordering],
        'parents': {names[i]: [names[p] for p in members(mask)] for i, mask in enumerate(net.parents)},
    }


def save_network(net: BeliefNetwork, path: PathLike) -> str:
    return dump_json(network_to_dict(net), path)
