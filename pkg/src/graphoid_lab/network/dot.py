"""
DOT export for belief networks
"""

from typing import Iterable, Optional, Tuple

from graphviz import Digraph


def to_digraph(names: Iterable[str], edges: Iterable[Tuple[str, str]],
               name: str = 'network', highlight: Optional[Iterable[str]] = None) -> Digraph:
    """
    Graphviz digraph over named nodes and edges, in the given order

    Args:
        names: Node names
        edges: (parent, child) name pairs
        name: Graph name
        highlight: Nodes drawn with a double border
    """
    marked = set(highlight or ())
    graph = Digraph(name=name)
    for node in names:
        if node in marked:
            graph.node(node, shape='doublecircle')
        else:
            graph.node(node)
    for parent, child in edges:
        graph.edge(parent, child)
    return graph


def export_dot(net, name: str = 'network', highlight: Optional[Iterable[str]] = None) -> str:
    """
    DOT source for anything exposing node_names() and named_edges(),
    e.g. BeliefNetwork or GlobalNetwork
    """
    return to_digraph(net.node_names(), net.named_edges(), name=name, highlight=highlight).source
