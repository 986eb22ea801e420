"""GraphML and DOT serialization for the bipartite graph and projections."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path

from .errors import UnreadableFile
from .graph import BipartiteGraph, Side, UnipartiteGraph

GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"
NODE_TYPE_KEY = "d0"


def _graphml_root() -> ET.Element:
    ET.register_namespace("", GRAPHML_NS)
    root = ET.Element(f"{{{GRAPHML_NS}}}graphml")
    key = ET.SubElement(root, f"{{{GRAPHML_NS}}}key")
    key.set("id", NODE_TYPE_KEY)
    key.set("for", "node")
    key.set("attr.name", "type")
    key.set("attr.type", "string")
    return root


def _add_graph(root: ET.Element, nodes_with_types, edges) -> None:
    graph = ET.SubElement(root, f"{{{GRAPHML_NS}}}graph")
    graph.set("edgedefault", "undirected")
    for node_id, node_type in nodes_with_types:
        node = ET.SubElement(graph, f"{{{GRAPHML_NS}}}node")
        node.set("id", node_id)
        data = ET.SubElement(node, f"{{{GRAPHML_NS}}}data")
        data.set("key", NODE_TYPE_KEY)
        data.text = node_type
    for i, (u, v) in enumerate(edges):
        edge = ET.SubElement(graph, f"{{{GRAPHML_NS}}}edge")
        edge.set("id", f"e{i}")
        edge.set("source", u)
        edge.set("target", v)


def _serialize(root: ET.Element) -> str:
    ET.indent(root)
    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"


def bipartite_to_graphml(g: BipartiteGraph) -> str:
    """GraphML with node attribute ``type`` in {document, skill}."""
    root = _graphml_root()
    nodes = [(n, "document") for n in g.left_nodes] + [
        (n, "skill") for n in g.right_nodes
    ]
    _add_graph(root, nodes, sorted(g.edges))
    return _serialize(root)


def unipartite_to_graphml(g: UnipartiteGraph) -> str:
    root = _graphml_root()
    node_type = "document" if g.side is Side.DOCUMENTS else "skill"
    _add_graph(root, [(n, node_type) for n in g.nodes], sorted(g.edges))
    return _serialize(root)


def bipartite_from_graphml(source: str | Path) -> BipartiteGraph:
    """Re-import a bipartite GraphML written by :func:`bipartite_to_graphml`."""
    path = Path(source)
    try:
        tree = ET.parse(path)
    except (OSError, ET.ParseError) as exc:
        raise UnreadableFile(path, str(exc)) from exc
    graph = tree.getroot().find(f"{{{GRAPHML_NS}}}graph")
    if graph is None:
        raise UnreadableFile(path, "no <graph> element")
    left, right = [], []
    for node in graph.findall(f"{{{GRAPHML_NS}}}node"):
        data = node.find(f"{{{GRAPHML_NS}}}data")
        node_type = (data.text or "").strip() if data is not None else ""
        if node_type == "document":
            left.append(node.get("id"))
        else:
            right.append(node.get("id"))
    edges = frozenset(
        (e.get("source"), e.get("target"))
        for e in graph.findall(f"{{{GRAPHML_NS}}}edge")
    )
    return BipartiteGraph(
        left_nodes=tuple(sorted(left)),
        right_nodes=tuple(sorted(right)),
        edges=edges,
    )


def _dot_quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def bipartite_to_dot(g: BipartiteGraph) -> str:
    lines = ["graph skill_network {"]
    for n in g.left_nodes:
        lines.append(f"  {_dot_quote(n)} [shape=box];")
    for n in g.right_nodes:
        lines.append(f"  {_dot_quote(n)} [shape=ellipse];")
    for u, v in sorted(g.edges):
        lines.append(f"  {_dot_quote(u)} -- {_dot_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def unipartite_to_dot(g: UnipartiteGraph) -> str:
    lines = [f"graph {g.side.value}_projection {{"]
    for n in g.nodes:
        lines.append(f"  {_dot_quote(n)};")
    for u, v in sorted(g.edges):
        lines.append(f"  {_dot_quote(u)} -- {_dot_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
