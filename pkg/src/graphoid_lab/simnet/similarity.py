"""
Similarity networks

A connected similarity graph over the values of a hypothesis variable gets
one local belief network per edge, built from the distribution restricted to
the two hypothesis values of that edge. The global network is the union of
the links inside the hypothesis component of every local network.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from ..analysis.unrelatedness import totally_independent_pair
from ..distributions.oracles import oracle_for
from ..distributions.tabular import TabularDistribution, restrict_domain
from ..graphoid.universe import Universe, VariableId, VarSet, bit, members, subsets
from ..network.belief import BeliefNetwork, build, component_of
from ..utils.exceptions import CapacityError, InputError
from ..utils.logging import get_logger, log_performance

logger = get_logger(__name__)

DEFAULT_DISCRIMINATION_MAX_VARIABLES = 8

HypothesisPair = Tuple[str, str]


@dataclass(frozen=True)
class SimilarityGraph:
    """Undirected graph over the values of the hypothesis variable"""
    hypothesis: str
    values: Tuple[str, ...]
    edges: Tuple[HypothesisPair, ...]

    def __post_init__(self):
        if len(set(self.values)) != len(self.values) or len(self.values) < 2:
            raise InputError("a similarity graph needs at least two distinct hypothesis values",
                             field="values")
        seen = set()
        for a, b in self.edges:
            if a not in self.values or b not in self.values:
                raise InputError(f"edge ({a}, {b}) uses an unknown hypothesis value", field="edges")
            if a == b:
                raise InputError(f"self-loop on '{a}'", field="edges")
            key = frozenset((a, b))
            if key in seen:
                raise InputError(f"duplicate edge ({a}, {b})", field="edges")
            seen.add(key)
        if not nx.is_connected(self.to_networkx()):
            raise InputError("similarity graph is not connected", field="edges")

    @classmethod
    def create(cls, hypothesis: str, values: Sequence[str],
               edges: Iterable[Sequence[str]]) -> 'SimilarityGraph':
        """Normalize edge orientation to value order and sort the edges"""
        values = tuple(values)
        position = {v: i for i, v in enumerate(values)}
        normalized = []
        for edge in edges:
            a, b = edge
            if a in position and b in position and position[a] > position[b]:
                a, b = b, a
            normalized.append((a, b))
        normalized.sort(key=lambda e: (position.get(e[0], -1), position.get(e[1], -1)))
        return cls(hypothesis, values, tuple(normalized))

    @classmethod
    def path(cls, hypothesis: str, values: Sequence[str]) -> 'SimilarityGraph':
        """Chain h1 - h2 - ... - hk"""
        values = tuple(values)
        return cls(hypothesis, values, tuple(zip(values, values[1:])))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.values)
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self) -> dict:
        return {
            'hypothesis': self.hypothesis,
            'values': list(self.values),
            'edges': [list(edge) for edge in self.edges],
        }


@dataclass(frozen=True)
class LocalNetwork:
    """Belief network for one similarity edge"""
    edge: HypothesisPair
    hypothesis: VariableId
    network: BeliefNetwork

    @property
    def symptom_order(self) -> Tuple[VariableId, ...]:
        return tuple(v for v in self.network.ordering if v != self.hypothesis)


@dataclass
class GlobalNetwork:
    """Union of the hypothesis components of the local networks"""
    universe: Universe
    hypothesis: VariableId
    nodes: VarSet
    edge_set: List[Tuple[VariableId, VariableId]] = field(default_factory=list)

    def edges(self) -> List[Tuple[VariableId, VariableId]]:
        return sorted(self.edge_set)

    def node_names(self) -> List[str]:
        return self.universe.names_of(self.nodes)

    def named_edges(self) -> List[Tuple[str, str]]:
        names = self.universe.names
        return [(names[p], names[c]) for p, c in self.edges()]

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.node_names())
        graph.add_edges_from(self.named_edges())
        return graph

    @property
    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def to_dict(self) -> dict:
        return {
            'hypothesis': self.universe.names[self.hypothesis],
            'nodes': self.node_names(),
            'edges': [list(edge) for edge in self.named_edges()],
            'acyclic': self.is_acyclic,
        }


def _hypothesis_index(p: TabularDistribution, h: Union[str, VariableId]) -> VariableId:
    return h if isinstance(h, int) else p.universe.index(h)


def _full_ordering(universe: Universe, h: VariableId,
                   ordering: Optional[Sequence[Union[str, VariableId]]]) -> List[VariableId]:
    """h first, then the shared symptom ordering (universe order by default)"""
    if ordering is None:
        symptoms = [v for v in range(universe.size) if v != h]
    else:
        symptoms = [v if isinstance(v, int) else universe.index(v) for v in ordering]
        symptoms = [v for v in symptoms if v != h]
    return [h] + symptoms


def build_local(p: TabularDistribution, h: Union[str, VariableId], edge: Sequence[str],
                ordering: Optional[Sequence[Union[str, VariableId]]] = None) -> LocalNetwork:
    """
    Local network for the hypothesis pair, assuming h takes one of the two values

    Raises:
        ZeroEvidenceError: P(h in edge) = 0
    """
    index = _hypothesis_index(p, h)
    h_i, h_j = edge
    restricted = restrict_domain(p, index, (h_i, h_j))
    net = build(oracle_for(restricted), _full_ordering(p.universe, index, ordering))
    return LocalNetwork(edge=(h_i, h_j), hypothesis=index, network=net)


def relevant_symptoms(local: LocalNetwork) -> VarSet:
    """Symptoms connected to the hypothesis in the local network"""
    return component_of(local.network, local.hypothesis) & ~bit(local.hypothesis)


@dataclass(frozen=True)
class Discrimination:
    """
    Both routes of the discrimination query

    undefined_contexts counts the contexts Z = z in which one of the two
    hypotheses has probability zero, so the direct comparison is undefined.
    """
    direct: bool
    via_independence: bool
    undefined_contexts: int = 0

    @property
    def agree(self) -> bool:
        return self.direct == self.via_independence

    def __bool__(self) -> bool:
        return self.direct


def _key(order: Sequence[VariableId], values: Dict[VariableId, str]) -> tuple:
    return tuple(values[v] for v in order)


def _discriminates_directly(p: TabularDistribution, s: VariableId, h: VariableId,
                            h_i: str, h_j: str) -> Tuple[bool, int]:
    """
    Some Z = z with both hypotheses possible gives different P(s | h, z)

    Returns:
        The verdict and the number of contexts skipped because one
        hypothesis has zero mass there
    """
    rest = p.universe.full & ~(bit(s) | bit(h))
    zero = Fraction(0)
    differs = False
    undefined = 0
    for z in subsets(rest):
        z_order = members(z)
        joint_order = members(bit(s) | bit(h) | z)
        context_order = members(bit(h) | z)
        joint = p.marginal_table(bit(s) | bit(h) | z)
        context = p.marginal_table(bit(h) | z)

        for z_values in product(*(p.domain(v) for v in z_order)):
            assigned = dict(zip(z_order, z_values))
            p_i = context.get(_key(context_order, {**assigned, h: h_i}), zero)
            p_j = context.get(_key(context_order, {**assigned, h: h_j}), zero)
            if p_i == 0 or p_j == 0:
                undefined += 1
                continue
            if differs:
                continue
            for s_value in p.domain(s):
                # P(s | h_i, z) against P(s | h_j, z), cross-multiplied
                lhs = joint.get(_key(joint_order, {**assigned, h: h_i, s: s_value}), zero) * p_j
                rhs = joint.get(_key(joint_order, {**assigned, h: h_j, s: s_value}), zero) * p_i
                if lhs != rhs:
                    differs = True
                    break
    return differs, undefined


def discriminates(p: TabularDistribution, s: Union[str, VariableId], h: Union[str, VariableId],
                  h_i: str, h_j: str,
                  max_variables: int = DEFAULT_DISCRIMINATION_MAX_VARIABLES) -> Discrimination:
    """
    Does symptom s help to tell h_i from h_j

    Computed directly from conditional probabilities, and as "s and h
    interact" in the distribution restricted to h in {h_i, h_j}.

    Raises:
        CapacityError: universe larger than max_variables
    """
    universe = p.universe
    if universe.size > max_variables:
        raise CapacityError(f"discrimination scan over {universe.size} variables", limit=max_variables)
    s_index = s if isinstance(s, int) else universe.index(s)
    h_index = _hypothesis_index(p, h)
    if s_index == h_index:
        raise InputError("the symptom cannot be the hypothesis variable", field="symptom")

    direct, undefined = _discriminates_directly(p, s_index, h_index, h_i, h_j)
    restricted = restrict_domain(p, h_index, (h_i, h_j))
    via_independence = not totally_independent_pair(oracle_for(restricted), s_index, h_index)

    result = Discrimination(direct=direct, via_independence=via_independence,
                            undefined_contexts=undefined)
    if not result.agree:
        logger.warning(
            f"Discrimination routes disagree for {universe.names[s_index]} "
            f"on ({h_i}, {h_j}): direct={direct}, via_independence={via_independence}"
        )
    if undefined:
        logger.warning(
            f"P({universe.names[s_index]} | h, z) is undefined in {undefined} contexts "
            f"for ({h_i}, {h_j})"
        )
    return result


def compose_global(locals_: Sequence[LocalNetwork]) -> GlobalNetwork:
    """
    Union of links (and their end nodes) inside the hypothesis component of
    each local network

    Raises:
        InputError: no local networks, or locals built under different
            orderings or universes
    """
    if not locals_:
        raise InputError("no local networks to compose")
    first = locals_[0]
    universe = first.network.universe
    for local in locals_[1:]:
        if local.network.universe != universe or local.hypothesis != first.hypothesis:
            raise InputError("local networks cover different variables", field="locals")
        if local.network.ordering != first.network.ordering:
            raise InputError(
                f"local network for {local.edge} uses a different ordering than {first.edge}",
                field="ordering",
            )

    nodes = bit(first.hypothesis)
    edges = set()
    for local in locals_:
        component = component_of(local.network, local.hypothesis)
        for parent, child in local.network.edges():
            if component & bit(parent) and component & bit(child):
                edges.add((parent, child))
                nodes |= bit(parent) | bit(child)

    result = GlobalNetwork(universe=universe, hypothesis=first.hypothesis, nodes=nodes,
                           edge_set=sorted(edges))
    if not result.is_acyclic:
        raise InputError("composed network has a directed cycle", field="locals")
    return result


@dataclass
class SimnetValidation:
    """Connectivity query against discrimination query, per (symptom, edge)"""
    universe: Universe
    graph: SimilarityGraph
    checked: int = 0
    mismatches: List[dict] = field(default_factory=list)
    route_disagreements: List[dict] = field(default_factory=list)
    strictly_positive: bool = True
    global_network: Optional[GlobalNetwork] = None
    relevant: Dict[str, List[str]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        acyclic = self.global_network is None or self.global_network.is_acyclic
        return not self.mismatches and not self.route_disagreements and acyclic

    def to_dict(self) -> dict:
        return {
            'pass': self.passed,
            'checked': self.checked,
            'strictly_positive': self.strictly_positive,
            'relevant_symptoms': self.relevant,
            'mismatches': self.mismatches,
            'route_disagreements': self.route_disagreements,
            'global_network': self.global_network.to_dict() if self.global_network else None,
        }


def build_locals(p: TabularDistribution, graph: SimilarityGraph,
                 ordering: Optional[Sequence[Union[str, VariableId]]] = None) -> List[LocalNetwork]:
    return [build_local(p, graph.hypothesis, edge, ordering) for edge in graph.edges]


@log_performance
def check_query_equivalence(p: TabularDistribution, graph: SimilarityGraph,
                            ordering: Optional[Sequence[Union[str, VariableId]]] = None,
                            max_variables: int = DEFAULT_DISCRIMINATION_MAX_VARIABLES) -> SimnetValidation:
    """
    For every similarity edge and symptom, "s discriminates the pair" must
    equal "s is connected to h in the local network"; the composed global
    network must be acyclic
    """
    universe = p.universe
    h = universe.index(graph.hypothesis)
    if set(p.domain(h)) != set(graph.values):
        raise InputError(
            f"hypothesis values {list(graph.values)} do not match the domain of '{graph.hypothesis}'",
            field="values",
        )

    report = SimnetValidation(universe=universe, graph=graph, strictly_positive=p.is_strictly_positive)
    if not report.strictly_positive:
        logger.warning("Distribution is not strictly positive; query equivalence is not guaranteed")

    locals_ = build_locals(p, graph, ordering)
    for local in locals_:
        relevant = relevant_symptoms(local)
        label = f"{local.edge[0]}-{local.edge[1]}"
        report.relevant[label] = universe.names_of(relevant)
        for s in range(universe.size):
            if s == h:
                continue
            verdict = discriminates(p, s, h, *local.edge, max_variables=max_variables)
            connected = bool(relevant & bit(s))
            report.checked += 1
            entry = {'edge': list(local.edge), 'symptom': universe.names[s]}
            # Undefined contexts leave the direct verdict unsettled
            if verdict.direct != connected or verdict.undefined_contexts:
                report.mismatches.append({
                    **entry, 'discriminates': verdict.direct, 'connected': connected,
                    'undefined_contexts': verdict.undefined_contexts,
                })
            if not verdict.agree:
                report.route_disagreements.append(
                    {**entry, 'direct': verdict.direct, 'via_independence': verdict.via_independence}
                )

    report.global_network = compose_global(locals_)
    return report
