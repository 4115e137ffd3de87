"""Embedded simple graphs, face traversal and the line-oriented graph file format.

A graph carries a rotation system: for every node the counterclockwise cyclic
order of its neighbours.  Faces are traced with the rule

    next(u -> v) = v -> w,  w = predecessor of u in the rotation at v

which keeps each face on the left of its darts.  The outer face of a
connected embedding is the face with the longest boundary walk; ties go to the
face whose smallest dart ``(u, v)`` is lexicographically smallest (so the
smallest node id on the walk decides first).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

Edge = tuple[int, int]
Dart = tuple[int, int]


class GraphError(ValueError):
    """Base class for rejected graph input."""


class GraphFormatError(GraphError):
    """Malformed file, non-simple graph or otherwise unusable structure."""


class EmbeddingError(GraphError):
    """The rotation system does not describe a planar embedding."""


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FaceWalk:
    """One face: its boundary as a closed sequence of darts."""

    boundary: tuple[Dart, ...]
    is_outer: bool = False

    @property
    def nodes(self) -> tuple[int, ...]:
        """Nodes in walk order (a node repeats when the walk passes it twice)."""
        return tuple(u for u, _ in self.boundary)

    def __len__(self) -> int:
        return len(self.boundary)

    def is_simple(self) -> bool:
        nodes = self.nodes
        return len(set(nodes)) == len(nodes)


@dataclass(frozen=True)
class EulerReport:
    vertices: int
    edges: int
    faces: int
    components: int

    @property
    def characteristic(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def holds(self) -> bool:
        # genus 0 on every component: V - E + F = 1 + C
        return self.characteristic == 1 + self.components


@dataclass(frozen=True, eq=False)
class PlanarGraph:
    """Simple undirected graph with a counterclockwise rotation system.

    Build instances through :meth:`from_rotation` or :func:`parse_graph`;
    both normalise the storage so equal graphs compare equal.
    """

    nodes: tuple[int, ...]
    edges: tuple[Edge, ...]
    rotation: Mapping[int, tuple[int, ...]] = field(repr=False)

    @classmethod
    def from_rotation(cls, rotation: Mapping[int, Iterable[int]],
                      nodes: Iterable[int] = ()) -> "PlanarGraph":
        """Build a graph from per-node neighbour orders.

        ``nodes`` may add isolated nodes not present as rotation keys.
        Raises :class:`GraphFormatError` for loops, repeated neighbours or
        asymmetric adjacency.
        """
        rot = {v: tuple(ws) for v, ws in rotation.items()}
        all_nodes = set(rot) | set(nodes)
        for v in all_nodes:
            if not isinstance(v, int) or v < 1:
                raise GraphFormatError(f"node ids must be positive integers, got {v!r}")
            rot.setdefault(v, ())
        edges = set()
        for v, ws in rot.items():
            if len(set(ws)) != len(ws):
                raise GraphFormatError(f"rotation at node {v} repeats a neighbour: {ws}")
            for w in ws:
                if w == v:
                    raise GraphFormatError(f"self-loop at node {v}")
                if w not in rot or v not in rot[w]:
                    raise GraphFormatError(f"edge {v}-{w} is not symmetric in the rotation")
                edges.add(canonical_edge(v, w))
        return cls(tuple(sorted(all_nodes)), tuple(sorted(edges)),
                   {v: rot[v] for v in sorted(rot)})

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], nodes: Iterable[int] = ()) -> "PlanarGraph":
        """Build with the default rotation: neighbours in ascending id order."""
        adj: dict[int, set[int]] = {v: set() for v in nodes}
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at node {u}")
            if v in adj.get(u, ()):
                raise GraphFormatError(f"duplicate edge {u}-{v}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls.from_rotation({v: sorted(ws) for v, ws in adj.items()})

    # -- basic queries ---------------------------------------------------

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.rotation and v in self.rotation[u]

    def darts(self) -> list[Dart]:
        return sorted((v, w) for v, ws in self.rotation.items() for w in ws)

    def connected_components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for start in self.nodes:
            if start in seen:
                continue
            seen.add(start)
            comp, queue = [], deque([start])
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self.rotation[v]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def without_edges(self, removed: Iterable[Edge]) -> "PlanarGraph":
        """Copy with the given edges deleted; rotations keep their order."""
        gone = {canonical_edge(u, v) for u, v in removed}
        rot = {v: tuple(w for w in ws if canonical_edge(v, w) not in gone)
               for v, ws in self.rotation.items()}
        return PlanarGraph.from_rotation(rot, self.nodes)

    def same_structure(self, other: "PlanarGraph") -> bool:
        return self.nodes == other.nodes and self.edges == other.edges

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarGraph):
            return NotImplemented
        return self.same_structure(other) and dict(self.rotation) == dict(other.rotation)

    def __hash__(self) -> int:
        return hash((self.nodes, self.edges))


def next_dart(rotation: Mapping[int, tuple[int, ...]] | Mapping[int, list[int]],
              dart: Dart) -> Dart:
    u, v = dart
    ring = rotation[v]
    return (v, ring[ring.index(u) - 1])


def trace_faces(rotation: Mapping[int, tuple[int, ...]] | Mapping[int, list[int]]
                ) -> list[tuple[Dart, ...]]:
    """Face walks of a rotation system, in order of their smallest dart."""
    # successor of dart (u, v) is (v, rotation[v][pos(u) - 1])
    succ = {}
    for v, ring in rotation.items():
        for k, u in enumerate(ring):
            succ[(u, v)] = (v, ring[k - 1])
    seen: set[Dart] = set()
    walks = []
    for start in sorted(succ):
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            d = succ[d]
        if d != start:
            raise EmbeddingError(f"face walk from {start} does not close")
        walks.append(tuple(walk))
    return walks


def outer_index(walks: list[tuple[Dart, ...]]) -> int:
    # walks arrive ordered by smallest dart, so max() keeps the first of equal length
    return max(range(len(walks)), key=lambda k: (len(walks[k]), -k))


def enumerate_faces(g: PlanarGraph) -> list[FaceWalk]:
    """All faces of ``g``; exactly one per connected component is outer.

    An isolated node contributes one outer face with an empty boundary.
    """
    walks = trace_faces(g.rotation)
    comp_of = {}
    comps = g.connected_components()
    for k, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = k
    by_comp: dict[int, list[int]] = {}
    for idx, walk in enumerate(walks):
        by_comp.setdefault(comp_of[walk[0][0]], []).append(idx)
    outer = set()
    for idxs in by_comp.values():
        outer.add(idxs[outer_index([walks[i] for i in idxs])])
    faces = [FaceWalk(w, i in outer) for i, w in enumerate(walks)]
    for k, comp in enumerate(comps):
        if k not in by_comp:
            faces.append(FaceWalk((), True))
    return faces


def euler_validate(g: PlanarGraph) -> EulerReport:
    faces = enumerate_faces(g)
    return EulerReport(g.num_nodes, g.num_edges, len(faces), len(g.connected_components()))


def bounded_faces(g: PlanarGraph) -> list[FaceWalk]:
    return [f for f in enumerate_faces(g) if not f.is_outer]


# -- file format -----------------------------------------------------------

def parse_graph(text: str) -> PlanarGraph:
    """Parse the ``p planar`` format and validate the embedding.

    Nodes are the ids named by edge lines.  When the header declares more
    nodes than that, the smallest unused ids are added as isolated nodes.
    """
    header = None
    edges: list[Edge] = []
    rotations: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag, args = fields[0], fields[1:]
        try:
            nums = [int(a) for a in (args[1:] if tag == "p" else args)]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field in {raw!r}") from None
        if tag == "p":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: second header line")
            if len(args) != 3 or args[0] != "planar" or nums[0] < 1 or nums[1] < 0:
                raise GraphFormatError(f"line {lineno}: expected 'p planar <n> <m>', got {raw!r}")
            if edges or rotations:
                raise GraphFormatError(f"line {lineno}: header must precede edge and rotation lines")
            header = (nums[0], nums[1])
        elif header is None:
            raise GraphFormatError(f"line {lineno}: data before the 'p planar' header")
        elif tag == "e":
            if len(nums) != 2 or min(nums) < 1:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>' with ids >= 1")
            u, v = nums
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at node {u}")
            edges.append(canonical_edge(u, v))
        elif tag == "r":
            if len(nums) < 2 or nums[0] < 1 or nums[1] != len(nums) - 2:
                raise GraphFormatError(f"line {lineno}: expected 'r <v> <d> <w1> ... <wd>'")
            if nums[0] in rotations:
                raise GraphFormatError(f"line {lineno}: second rotation line for node {nums[0]}")
            rotations[nums[0]] = nums[2:]
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {tag!r}")
    if header is None:
        raise GraphFormatError("missing 'p planar <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    if len(set(edges)) != len(edges):
        dup = next(e for e in edges if edges.count(e) > 1)
        raise GraphFormatError(f"duplicate edge {dup[0]}-{dup[1]}")

    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    if len(adj) > n:
        raise GraphFormatError(f"header declares {n} nodes, edges name {len(adj)}")
    nodes = set(adj)
    candidate = 1
    while len(nodes) < n:
        if candidate not in nodes:
            nodes.add(candidate)
        candidate += 1

    if rotations:
        for v, ws in rotations.items():
            if v not in adj:
                raise EmbeddingError(f"rotation line for node {v}, which has no edges")
            if len(set(ws)) != len(ws) or set(ws) != adj[v]:
                extra = sorted(set(ws) - adj[v])
                if extra:
                    raise EmbeddingError(f"rotation at node {v} lists non-neighbour(s) {extra}")
                raise EmbeddingError(f"rotation at node {v} is not a permutation of its neighbours")
        missing = sorted(set(adj) - set(rotations))
        if missing:
            raise GraphFormatError(f"rotation lines missing for node(s) {missing}")
        rot = {v: tuple(ws) for v, ws in rotations.items()}
    else:
        rot = {v: tuple(sorted(ws)) for v, ws in adj.items()}
    g = PlanarGraph.from_rotation(rot, nodes)
    if not g.is_connected():
        raise GraphFormatError(
            f"graph has {len(g.connected_components())} connected components; "
            "run each component separately")
    report = euler_validate(g)
    if not report.holds:
        source = "declared" if rotations else "assumed ascending-id"
        raise EmbeddingError(
            f"{source} rotation is not planar: V - E + F = {report.vertices} - "
            f"{report.edges} + {report.faces} = {report.characteristic}, expected 2")
    return g


def format_graph(g: PlanarGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p planar {g.num_nodes} {g.num_edges}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    for v in g.nodes:
        ws = g.rotation[v]
        if ws:
            lines.append(" ".join(["r", str(v), str(len(ws)), *map(str, ws)]))
    return "\n".join(lines) + "\n"


def parse_added_edges(text: str) -> list[Edge]:
    """Edges recorded by ``c added e u v`` comment lines, in file order."""
    added = []
    for raw in text.splitlines():
        fields = raw.split()
        if fields[:3] == ["c", "added", "e"] and len(fields) == 5:
            added.append(canonical_edge(int(fields[3]), int(fields[4])))
    return added
