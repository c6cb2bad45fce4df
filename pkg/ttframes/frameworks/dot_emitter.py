from typing import Any, Dict, List, Tuple

from pydotplus.graphviz import Dot, Edge, Node

from ttframes.frameworks.logging_config import get_logger
from ttframes.usecases.interfaces.framework_interfaces import DocumentEmitterInterface


logger = get_logger(__name__)


def hasse_graph(name: str, hasse: Dict[str, Any]) -> Dot:
    """Bottom-to-top Hasse diagram; node ``n{i}`` is the i-th element."""
    graph = Dot(graph_name=_quote(name), graph_type="digraph")
    graph.set_rankdir("BT")
    for i, label in enumerate(hasse["nodes"]):
        graph.add_node(Node(f"n{i}", label=_quote(label)))
    for lower, upper in hasse["edges"]:
        graph.add_edge(Edge(f"n{lower}", f"n{upper}"))
    return graph


def _quote(text: str) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _graphs(kind: str, document: Dict[str, Any]) -> List[Tuple[str, Dict[str, Any]]]:
    if "hasse" in document:
        return [(kind, document["hasse"])]
    found = []
    for name, part in sorted(document.get("structures", {}).items()):
        if isinstance(part, dict) and "hasse" in part:
            found.append((name, part["hasse"]))
    return found


class DotDocumentEmitter(DocumentEmitterInterface):
    """One digraph per ordered structure in the document, in name order."""

    def render(self, kind: str, document: Dict[str, Any]) -> str:
        graphs = _graphs(kind, document)
        if not graphs:
            raise ValueError(f"{kind} document has no order to draw")
        logger.debug(f"Rendering {len(graphs)} graph(s) for {kind}")
        return "".join(hasse_graph(name, hasse).to_string() for name, hasse in graphs)
