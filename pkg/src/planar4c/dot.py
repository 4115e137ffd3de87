"""Graphviz DOT export of a coloured triangulation."""

from __future__ import annotations

from typing import Mapping

from .triangulate import Triangulation

# colour label 1..4 -> fill colour, in this order
PALETTE = ("tomato", "palegreen", "lightskyblue", "gold")


def to_dot(t: Triangulation, node_colors: Mapping[int, int] | None = None) -> str:
    """Undirected DOT graph; added edges dashed, nodes filled by colour label.

    ``node_colors`` is keyed by node id.  Nodes without a colour stay unfilled.
    """
    added = set(t.added_edges)
    lines = ["graph planar4c {", "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in t.graph.nodes:
        if node_colors and v in node_colors:
            lab = node_colors[v]
            lines.append(f'  {v} [fillcolor="{PALETTE[lab - 1]}", label="{v}"];')
        else:
            lines.append(f'  {v} [label="{v}"];')
    for u, v in t.graph.edges:
        style = " [style=dashed]" if (u, v) in added else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
