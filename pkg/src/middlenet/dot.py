"""Graphviz DOT serialisation of a directed graph."""
from __future__ import annotations

from .graph import DirectedGraph
from .middleman import MiddlemanClass, classify_all


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: DirectedGraph) -> str:
    """Render the graph as a DOT digraph in node order; middlemen carry a
    class attribute (strong/weak) for styling."""
    classes = classify_all(g)
    lines = ["digraph {"]
    for node in g.nodes:
        cls = classes[node]
        if cls is MiddlemanClass.NONE:
            lines.append(f"  {_quote(node)};")
        else:
            lines.append(f"  {_quote(node)} [class={_quote(cls.value)}];")
    for a, b in g.arcs:
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
