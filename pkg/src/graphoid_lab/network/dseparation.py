"""
d-separation and active trails
"""

from collections import deque
from dataclasses import dataclass
from typing import List, Tuple

from ..graphoid.triplet import check_triplet
from ..graphoid.universe import Universe, VariableId, VarSet, bit, members
from ..utils.exceptions import CapacityError
from ..utils.logging import get_logger
from .belief import BeliefNetwork

logger = get_logger(__name__)

DEFAULT_TRAIL_CAP = 1_000_000


@dataclass(frozen=True)
class Trail:
    """
    Edge-simple trail: nodes[i] and nodes[i + 1] are joined by an edge that points
    forward (nodes[i] -> nodes[i + 1]) when forward[i] is true
    """
    nodes: Tuple[VariableId, ...]
    forward: Tuple[bool, ...]

    def head_to_head(self) -> List[VariableId]:
        """Interior nodes where two consecutive edges meet head to head"""
        return [self.nodes[i] for i in range(1, len(self.nodes) - 1)
                if self.forward[i - 1] and not self.forward[i]]

    def render(self, universe: Universe) -> str:
        parts = [universe.names[self.nodes[0]]]
        for node, forward in zip(self.nodes[1:], self.forward):
            parts.append('->' if forward else '<-')
            parts.append(universe.names[node])
        return ''.join(parts)


def d_separated(net: BeliefNetwork, x: VarSet, y: VarSet, z: VarSet) -> bool:
    """
    True iff no trail between X and Y is active given Z

    Reachability over (node, direction) states: a node entered from a child
    may continue to its parents and children unless it is in Z; a node
    entered from a parent continues to its children when outside Z and back
    up to its parents when it is in Z or has a descendant there.
    """
    check_triplet(x, y, z, net.universe)
    if x == 0 or y == 0:
        return True

    ancestors_of_z = net.ancestors(z)

    # Nodes entered from a child, traveling against edge direction
    backward = deque(members(x))
    backward_visited = 0
    # Nodes entered from a parent, traveling along edge direction
    forward: deque = deque()
    forward_visited = 0

    while backward or forward:
        if backward:
            node = backward.popleft()
            if backward_visited & bit(node):
                continue
            backward_visited |= bit(node)
            if y & bit(node):
                return False
            if z & bit(node):
                continue
            backward.extend(members(net.parents[node] & ~backward_visited))
            forward.extend(members(net.children(node) & ~forward_visited))
        else:
            node = forward.popleft()
            if forward_visited & bit(node):
                continue
            forward_visited |= bit(node)
            if y & bit(node):
                return False
            if ancestors_of_z & bit(node):
                backward.extend(members(net.parents[node] & ~backward_visited))
            if not z & bit(node):
                forward.extend(members(net.children(node) & ~forward_visited))

    return True


def enumerate_active_trails(net: BeliefNetwork, x: VarSet, y: VarSet, z: VarSet,
                            cap: int = DEFAULT_TRAIL_CAP) -> List[Trail]:
    """
    Every edge-simple trail from a node of X to a node of Y that is active
    given Z

    A trail may pass a node more than once but never reuses an edge; each
    pass is judged on its own pair of edges. Trails end at the first node of
    Y they reach. Naive depth-first enumeration; each partial trail extended
    counts against the cap.

    Raises:
        CapacityError: when more than cap partial trails are expanded
    """
    check_triplet(x, y, z, net.universe)
    if x == 0 or y == 0:
        return []

    size = net.universe.size
    ancestors_of_z = net.ancestors(z)
    neighbours = {
        v: [(p, False) for p in members(net.parents[v])] + [(c, True) for c in members(net.children(v))]
        for v in net.nodes
    }
    neighbours = {v: sorted(pairs) for v, pairs in neighbours.items()}

    def edge(u: VariableId, v: VariableId) -> int:
        return 1 << (min(u, v) * size + max(u, v))

    def passes(node: VariableId, into: bool, out: bool) -> bool:
        # into: edge before node points at it; out: edge after node points away
        if into and not out:
            return bool(ancestors_of_z & bit(node))
        return not z & bit(node)

    trails: List[Trail] = []
    expanded = 0

    def extend(nodes: List[VariableId], forward: List[bool], used: int) -> None:
        nonlocal expanded
        expanded += 1
        if expanded > cap:
            raise CapacityError("active trail enumeration", limit=cap)

        last = nodes[-1]
        for nxt, points_forward in neighbours[last]:
            link = edge(last, nxt)
            if used & link:
                continue
            if len(nodes) > 1 and not passes(last, forward[-1], points_forward):
                continue
            nodes.append(nxt)
            forward.append(points_forward)
            if y & bit(nxt):
                trails.append(Trail(tuple(nodes), tuple(forward)))
            else:
                extend(nodes, forward, used | link)
            nodes.pop()
            forward.pop()

    for start in members(x):
        extend([start], [], 0)

    logger.debug(f"Enumerated {len(trails)} active trails after {expanded} expansions")
    return trails
