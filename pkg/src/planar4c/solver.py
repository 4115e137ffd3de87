"""0-1 feasible points of the colour system, found as 4-colourings.

Only node components are branched on.  Each triangle's face then takes the
one label its three corners do not use, which is the only way to satisfy the
triangle's four colour equations.  Adjacent nodes must differ: two adjacent
nodes share a triangle, or the edge is kept proper anyway so the result is a
colouring of the whole graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .graph import PlanarGraph
from .system import COLORS, Coloring, LinearSystem, residual
from .triangulate import Triangulation, component_ids, enumerate_triangles

ALL = 0b1111


class SearchError(Exception):
    pass


class StepLimitExceeded(SearchError):
    def __init__(self, steps: int):
        super().__init__(f"no coloring found within {steps} node expansions")
        self.steps = steps


class Uncolorable(SearchError):
    """The whole search space was exhausted without a colouring."""


class GuardExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    node_order: str = "most-constrained"  # or "input-order"
    step_limit: int | None = None

    def __post_init__(self):
        if self.node_order not in ("most-constrained", "input-order"):
            raise ValueError(f"unknown node order {self.node_order!r}")
        if self.step_limit is not None and self.step_limit < 1:
            raise ValueError("step_limit must be positive")


def default_step_limit(num_nodes: int) -> int:
    return 50 * 4 ** min(num_nodes, 12)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length()


def color_nodes(adj: dict[int, set[int]], cfg: SearchConfig = SearchConfig()) -> dict[int, int]:
    """Backtracking 4-colouring of an adjacency map keyed by component id."""
    order = sorted(adj)
    limit = cfg.step_limit or default_step_limit(len(order))
    cand = {v: ALL for v in order}
    color: dict[int, int] = {}
    steps = 0

    def pick() -> int | None:
        best = None
        best_count = 5
        for v in order:
            if v in color:
                continue
            if cfg.node_order == "input-order":
                return v
            k = bin(cand[v]).count("1")
            if k < best_count:
                best, best_count = v, k
        return best

    # each frame: (node, remaining colour mask, undo list of neighbours trimmed)
    stack: list[list] = []
    v = pick()
    if v is not None:
        stack.append([v, cand[v], []])
    while stack:
        frame = stack[-1]
        v, remaining, undo = frame
        if v in color:
            lab = color.pop(v)
            for w in undo:
                cand[w] |= 1 << (lab - 1)
            undo.clear()
        if not remaining:
            stack.pop()
            continue
        lab = _lowest(remaining)
        frame[1] = remaining & ~(1 << (lab - 1))
        steps += 1
        if steps > limit:
            raise StepLimitExceeded(limit)
        bit = 1 << (lab - 1)
        color[v] = lab
        dead = False
        for w in adj[v]:
            if w not in color and cand[w] & bit:
                cand[w] &= ~bit
                undo.append(w)
                if not cand[w]:
                    dead = True
        if dead:
            continue
        nxt = pick()
        if nxt is None:
            return dict(color)
        stack.append([nxt, cand[nxt], []])
    if not adj:
        return {}
    raise Uncolorable("search space exhausted")


def solve(t: Triangulation, cfg: SearchConfig = SearchConfig()) -> Coloring:
    """A colouring of nodes and bounded faces satisfying the full system.

    Raises :class:`StepLimitExceeded` or :class:`Uncolorable`.
    """
    triangles = enumerate_triangles(t)
    node_map, _ = component_ids(t.graph.nodes, len(triangles))
    adj = {node_map[v]: {node_map[w] for w in t.graph.neighbors(v)} for v in t.graph.nodes}
    assignment = color_nodes(adj, cfg)
    for tri in triangles:
        used = {assignment[i] for i in tri.nodes}
        (free,) = set(COLORS) - used
        assignment[tri.face] = free
    return Coloring(dict(sorted(assignment.items())), frozenset(tri.face for tri in triangles))


# -- exhaustive oracles --------------------------------------------------------

def brute_force_count(g: PlanarGraph, k: int = 4) -> int:
    """Number of proper node k-colourings, by plain enumeration of assignments.

    Partial assignments that already colour an edge's ends alike are cut,
    nothing else is pruned.
    """
    if g.num_nodes > 16:
        raise GuardExceeded(f"brute force limited to 16 nodes, graph has {g.num_nodes}")
    nodes = list(g.nodes)
    pos = {v: p for p, v in enumerate(nodes)}
    earlier = [[pos[w] for w in g.neighbors(v) if pos[w] < p] for p, v in enumerate(nodes)]
    labels = [0] * len(nodes)

    def count(p: int) -> int:
        if p == len(nodes):
            return 1
        total = 0
        for c in range(k):
            if all(labels[q] != c for q in earlier[p]):
                labels[p] = c
                total += count(p + 1)
        return total

    return count(0)


def enumerate_system_solutions(s: LinearSystem, limit: int | None = None) -> list[list[int]]:
    """All 0-1 solutions (up to ``limit``) of a system with at most 12 components.

    Components are coloured in id order; a row is tested as soon as its last
    component is assigned, and every emitted vector is re-checked exactly.
    """
    n = s.num_components
    if n > 12:
        raise GuardExceeded(f"enumeration limited to 12 components, system has {n}")
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n + 1)]
    for eq in s.rows:
        comps = tuple(i for i, _ in eq.support)
        closing[max(comps)].append(tuple(s.column(v) for v in eq.support))
    x = [0] * s.num_variables
    out: list[list[int]] = []

    def rec(i: int) -> Iterator[list[int]]:
        if i > n:
            yield list(x)
            return
        for j in COLORS:
            x[4 * (i - 1) + j - 1] = 1
            if all(sum(x[c] for c in cols) == 1 for cols in closing[i]):
                yield from rec(i + 1)
            x[4 * (i - 1) + j - 1] = 0

    for vec in itertools.islice(rec(1), limit):
        if residual(s, vec) != 0:
            raise AssertionError(f"enumerated vector violates the system: {vec}")
        out.append(vec)
    return out
