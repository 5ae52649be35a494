"""
Belief network construction

Given an independence oracle and a total ordering of its variables, each
variable receives a minimal set of predecessors that renders it independent
of the remaining predecessors.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import networkx as nx

from ..graphoid.model import IndependenceOracle
from ..graphoid.universe import Universe, VariableId, VarSet, bit, from_indices, members, subsets
from ..utils.exceptions import InputError
from ..utils.logging import get_logger, log_performance

logger = get_logger(__name__)

Edge = Tuple[VariableId, VariableId]


@dataclass(frozen=True)
class BeliefNetwork:
    """
    DAG built under a construction ordering

    parents[i] is the parent VarSet of variable i (indexed by VariableId, not
    by position in the ordering).
    """
    universe: Universe
    ordering: Tuple[VariableId, ...]
    parents: Tuple[VarSet, ...]

    @classmethod
    def from_edges(cls, universe: Universe, edges: Iterable[Tuple[str, str]]) -> 'BeliefNetwork':
        """
        Network from named edges; the ordering is the lexicographically
        smallest topological order

        Raises:
            InputError: unknown names or a directed cycle
        """
        parents = [0] * universe.size
        graph = nx.DiGraph()
        graph.add_nodes_from(range(universe.size))
        for parent, child in edges:
            p, c = universe.index(parent), universe.index(child)
            if p == c:
                raise InputError(f"self-loop on '{parent}'", field="edges")
            parents[c] |= bit(p)
            graph.add_edge(p, c)

        if not nx.is_directed_acyclic_graph(graph):
            raise InputError("edges contain a directed cycle", field="edges")
        ordering = tuple(nx.lexicographical_topological_sort(graph))
        return cls(universe=universe, ordering=ordering, parents=tuple(parents))

    @property
    def nodes(self) -> List[VariableId]:
        return list(range(self.universe.size))

    def edges(self) -> List[Edge]:
        """(parent, child) pairs sorted by parent then child"""
        return sorted((p, child) for child, mask in enumerate(self.parents) for p in members(mask))

    def node_names(self) -> List[str]:
        return list(self.universe.names)

    def named_edges(self) -> List[Tuple[str, str]]:
        names = self.universe.names
        return [(names[p], names[c]) for p, c in self.edges()]

    def children(self, node: VariableId) -> VarSet:
        return from_indices(c for c, mask in enumerate(self.parents) if mask & bit(node))

    def ancestors(self, nodes: VarSet) -> VarSet:
        """Every ancestor of the given nodes, the nodes themselves included"""
        result = 0
        frontier = nodes
        while frontier:
            result |= frontier
            grown = 0
            for v in members(frontier):
                grown |= self.parents[v]
            frontier = grown & ~result
        return result

    def descendants(self, node: VariableId) -> VarSet:
        """Strict descendants of one node"""
        result = 0
        frontier = self.children(node)
        while frontier:
            result |= frontier
            grown = 0
            for v in members(frontier):
                grown |= self.children(v)
            frontier = grown & ~result
        return result

    def adjacent(self, a: VariableId, b: VariableId) -> bool:
        return bool(self.parents[a] & bit(b) or self.parents[b] & bit(a))

    def to_networkx(self) -> nx.DiGraph:
        """Directed graph over variable names"""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.universe.names)
        graph.add_edges_from(self.named_edges())
        return graph

    def to_dict(self) -> dict:
        names = self.universe.names
        return {
            'variables': list(names),
            'ordering': [names[i] for i in self.ordering],
            'parents': {names[i]: self.universe.names_of(mask) for i, mask in enumerate(self.parents)},
            'edges': [list(edge) for edge in self.named_edges()],
        }


def minimal_parents(oracle: IndependenceOracle, u: VariableId, predecessors: VarSet) -> VarSet:
    """
    First parent set, by increasing cardinality then lexicographically, that
    renders u independent of the remaining predecessors

    Args:
        oracle: Independence oracle
        u: Variable receiving parents
        predecessors: Variables preceding u in the ordering

    Returns:
        Parent VarSet (predecessors itself always qualifies)
    """
    if predecessors & bit(u):
        raise InputError(f"variable '{oracle.universe.names[u]}' cannot precede itself", field="ordering")

    for candidate in subsets(predecessors):
        if oracle.independent(bit(u), predecessors & ~candidate, candidate):
            return candidate
    return predecessors


def minimal_parent_sets(oracle: IndependenceOracle, u: VariableId, predecessors: VarSet) -> List[VarSet]:
    """Every inclusion-minimal parent set, in the same enumeration order"""
    found: List[VarSet] = []
    for candidate in subsets(predecessors):
        if any(candidate & smaller == smaller for smaller in found):
            continue
        if oracle.independent(bit(u), predecessors & ~candidate, candidate):
            found.append(candidate)
    return found


def resolve_ordering(universe: Universe,
                     ordering: Union[str, Sequence[Union[str, VariableId]]]) -> Tuple[VariableId, ...]:
    """
    Turn "a,b,c", a list of names, or a list of indices into a checked
    permutation of the universe
    """
    if isinstance(ordering, str):
        items: Sequence[Union[str, VariableId]] = [p.strip() for p in ordering.split(',') if p.strip()]
    else:
        items = list(ordering)

    resolved = tuple(item if isinstance(item, int) else universe.index(item) for item in items)
    if sorted(resolved) != list(range(universe.size)):
        raise InputError(
            f"ordering {[universe.names[i] if 0 <= i < universe.size else i for i in resolved]} "
            f"is not a permutation of {list(universe.names)}",
            field="ordering",
        )
    return resolved


@log_performance
def build(oracle: IndependenceOracle,
          ordering: Union[str, Sequence[Union[str, VariableId]]]) -> BeliefNetwork:
    """
    Build a belief network by giving each variable its minimal parents

    Args:
        oracle: Independence oracle
        ordering: Construction ordering (names or indices)

    Returns:
        BeliefNetwork
    """
    universe = oracle.universe
    order = resolve_ordering(universe, ordering)

    parents = [0] * universe.size
    predecessors = 0
    for u in order:
        parents[u] = minimal_parents(oracle, u, predecessors)
        predecessors |= bit(u)

    net = BeliefNetwork(universe=universe, ordering=order, parents=tuple(parents))
    logger.debug(
        f"Built network under {','.join(universe.names[i] for i in order)} "
        f"with {len(net.edges())} edges"
    )
    return net


def connected_components(net: BeliefNetwork) -> List[VarSet]:
    """Connected components of the underlying undirected graph, ordered by least member"""
    graph = nx.Graph()
    graph.add_nodes_from(net.nodes)
    graph.add_edges_from(net.edges())
    components = [from_indices(component) for component in nx.connected_components(graph)]
    return sorted(components, key=lambda mask: mask & -mask)


def component_of(net: BeliefNetwork, node: VariableId) -> VarSet:
    for component in connected_components(net):
        if component & bit(node):
            return component
    return bit(node)
