"""Chord insertion that turns every bounded face into a triangle.

Faces are handled in face-list order.  A face whose walk repeats a node is
first split at such a node (chord between the two walk neighbours of that
corner) until it is a simple cycle.  A simple cycle of length > 3 is then
fan-triangulated from its smallest node; when a fan chord already exists
elsewhere the next-smallest apex is tried, and if every apex is blocked one
ear chord ``(w[k-1], w[k+1])`` is inserted and the face is revisited.

The outer face is never touched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import Dart, Edge, GraphError, PlanarGraph, canonical_edge, outer_index, trace_faces


class TriangulationError(GraphError):
    pass


class Triangle(NamedTuple):
    """A bounded triangular face as four component ids: corners ascending, then the face."""

    a: int
    b: int
    c: int
    face: int

    @property
    def nodes(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def components(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.face)

    def label(self) -> str:
        return f"T{self.a},{self.b},{self.c},{self.face}"


@dataclass(frozen=True)
class Triangulation:
    graph: PlanarGraph
    added_edges: tuple[Edge, ...]
    original: PlanarGraph


def _insert_chord(rot: dict[int, list[int]], walk: list[int], i: int, j: int) -> tuple[list[int], list[int]]:
    """Add chord walk[i]-walk[j] inside the face; return the two new walks.

    The first returned walk runs walk[i] .. walk[j], the second walk[j] .. walk[i].
    """
    n = len(walk)
    a, b = walk[i], walk[j]
    # the new neighbour goes right before the walk predecessor of each corner
    ring = rot[a]
    ring.insert(ring.index(walk[i - 1]), b)
    ring = rot[b]
    ring.insert(ring.index(walk[j - 1]), a)
    first = [walk[(i + k) % n] for k in range((j - i) % n + 1)]
    second = [walk[(j + k) % n] for k in range((i - j) % n + 1)]
    return first, second


def _has_edge(rot: dict[int, list[int]], u: int, v: int) -> bool:
    return v in rot[u]


def _split_repeated(rot, walk, added) -> list[int] | None:
    """One cut-vertex augmentation step; returns the remaining walk or None."""
    n = len(walk)
    counts = {}
    for v in walk:
        counts[v] = counts.get(v, 0) + 1
    for i, v in enumerate(walk):
        if counts[v] < 2:
            continue
        x, y = walk[i - 1], walk[(i + 1) % n]
        if x == y or _has_edge(rot, x, y):
            continue
        first, second = _insert_chord(rot, walk, (i - 1) % n, (i + 1) % n)
        added.append(canonical_edge(x, y))
        # first is the triangle x, v, y
        return second
    return None


def _fan_apex(rot, walk) -> int | None:
    n = len(walk)
    for apex in sorted(walk):
        p = walk.index(apex)
        targets = [walk[(p + k) % n] for k in range(2, n - 1)]
        if not any(_has_edge(rot, apex, t) for t in targets):
            return p
    return None


def _fan(rot, walk, p, added) -> None:
    n = len(walk)
    cur = walk[p:] + walk[:p]
    for _ in range(n - 3):
        _, rest = _insert_chord(rot, cur, 0, 2)
        added.append(canonical_edge(cur[0], cur[2]))
        # rest runs cur[2] .. cur[0]; rotate so the apex leads again
        cur = rest[-1:] + rest[:-1]


def _ear(rot, walk, added) -> list[int] | None:
    n = len(walk)
    for k in range(n):
        x, y = walk[k - 1], walk[(k + 1) % n]
        if x != y and not _has_edge(rot, x, y):
            _, rest = _insert_chord(rot, walk, (k - 1) % n, (k + 1) % n)
            added.append(canonical_edge(x, y))
            return rest
    return None


def _triangulate_face(rot, walk: list[int], added: list[Edge]) -> None:
    start = list(walk)
    while len(walk) > 3:
        if len(set(walk)) != len(walk):
            nxt = _split_repeated(rot, walk, added)
            if nxt is None:
                raise TriangulationError(
                    f"face walk {' '.join(map(str, start))} cannot be reduced to a simple cycle")
            walk = nxt
            continue
        p = _fan_apex(rot, walk)
        if p is not None:
            _fan(rot, walk, p, added)
            return
        nxt = _ear(rot, walk, added)
        if nxt is None:
            raise TriangulationError(
                f"no valid chord in face walk {' '.join(map(str, walk))}")
        walk = nxt


def triangulate(g: PlanarGraph) -> Triangulation:
    """Triangulate every bounded face of a connected embedded graph.

    Example: the 5-node wheel-minus-spoke gains the single chord 1-3.
    """
    if not g.is_connected():
        raise TriangulationError("triangulation needs a connected graph")
    rot = {v: list(ws) for v, ws in g.rotation.items()}
    walks = trace_faces(g.rotation)
    added: list[Edge] = []
    if walks:
        outer = walks[outer_index(walks)]
        for walk in walks:
            if walk is outer or len(walk) <= 3:
                continue
            _triangulate_face(rot, [u for u, _ in walk], added)
    result = PlanarGraph.from_rotation(rot, g.nodes)
    return Triangulation(result, tuple(added), g)


def bounded_triangle_walks(g: PlanarGraph) -> list[tuple[Dart, ...]]:
    walks = trace_faces(g.rotation)
    if not walks:
        return []
    k = outer_index(walks)
    return [w for i, w in enumerate(walks) if i != k]


def component_ids(node_ids: tuple[int, ...], num_faces: int) -> tuple[dict[int, int], list[int]]:
    """Component numbering shared by nodes and faces.

    Node ids are kept when they all fit in ``1 .. |V|+T``; faces then take the
    unused ids in ascending order.  Otherwise nodes are renumbered ``1 .. |V|``
    by ascending id and faces follow.  Returns (node id -> component, face ids).
    """
    total = len(node_ids) + num_faces
    if node_ids and max(node_ids) > total:
        node_map = {v: k for k, v in enumerate(sorted(node_ids), 1)}
    else:
        node_map = {v: v for v in node_ids}
    used = set(node_map.values())
    faces = [c for c in range(1, total + 1) if c not in used]
    return node_map, faces


def enumerate_triangles(t: Triangulation) -> list[Triangle]:
    """One Triangle per bounded face in component ids, sorted by corners."""
    corners = []
    for walk in bounded_triangle_walks(t.graph):
        nodes = sorted({u for u, _ in walk})
        if len(walk) != 3 or len(nodes) != 3:
            raise TriangulationError(f"bounded face {walk} is not a triangle")
        corners.append(tuple(nodes))
    node_map, faces = component_ids(t.graph.nodes, len(corners))
    corners = sorted(tuple(node_map[v] for v in tri) for tri in corners)
    return [Triangle(a, b, c, d) for (a, b, c), d in zip(corners, faces)]
