"""Seeded random planar instances.

Randomness comes from :class:`XorShift64Star`, fully specified here so other
implementations can reproduce every instance bit for bit:

* state initialisation: ``s = splitmix64(seed)``; if that is 0 use
  ``0x9E3779B97F4A7C15``
* step: ``s ^= s >> 12; s ^= s << 25 (mod 2**64); s ^= s >> 27``
* output: ``(s * 0x2545F4914F6CDD1D) mod 2**64``
* ``below(k)`` = ``output % k``

Maximal planar graphs grow from the triangle 1-2-3 by inserting node ``v``
into the bounded face with index ``below(#bounded faces)`` in face-list order
(see :func:`planar4c.graph.enumerate_faces`).  Deletions draw from the
ascending list of edges whose removal keeps the graph connected.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .graph import Edge, GraphError, PlanarGraph, canonical_edge

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.state = splitmix64(seed) or 0x9E3779B97F4A7C15

    def next(self) -> int:
        s = self.state
        s ^= s >> 12
        s = (s ^ (s << 25)) & MASK64
        s ^= s >> 27
        self.state = s
        return (s * 0x2545F4914F6CDD1D) & MASK64

    def below(self, k: int) -> int:
        return self.next() % k


class GenerationError(GraphError):
    pass


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int = 0
    deletions: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n must be at least 3, got {self.n}")
        if self.deletions < 0:
            raise ValueError("deletions must be non-negative")
        if not 0 <= self.seed <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def max_deletions(self) -> int:
        return (3 * self.n - 6) - (self.n - 1)


def _grow(cfg: GenConfig, rng: XorShift64Star) -> PlanarGraph:
    rot: dict[int, list[int]] = {1: [2, 3], 2: [3, 1], 3: [1, 2]}
    # bounded faces keyed by their smallest dart, which is face-list order;
    # the outer face 1-2-3 owns dart (1, 2) for good
    keys = [(1, 3)]
    faces = {(1, 3): (1, 3, 2)}
    for v in range(4, cfg.n + 1):
        key = keys.pop(rng.below(len(keys)))
        corners = faces.pop(key)
        rot[v] = list(corners)
        for k, c in enumerate(corners):
            ring = rot[c]
            ring.insert(ring.index(corners[k - 1]), v)
        for k, c in enumerate(corners):
            d = corners[(k + 1) % 3]
            walk = (c, d, v)
            new_key = min((c, d), (d, v), (v, c))
            k0 = walk.index(new_key[0])
            faces[new_key] = walk[k0:] + walk[:k0]
            bisect.insort(keys, new_key)
    return PlanarGraph.from_rotation(rot)


def gen_maximal_planar(cfg: GenConfig) -> PlanarGraph:
    """Random maximal planar graph: E = 3n - 6, 2n - 5 bounded triangles."""
    return _grow(cfg, XorShift64Star(cfg.seed))


def bridges(rot: dict[int, list[int]]) -> set[Edge]:
    """Bridges of a graph given as adjacency lists (iterative lowlink search)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    found: set[Edge] = set()
    for root in rot:
        if root in index:
            continue
        index[root] = low[root] = len(index)
        stack = [(root, 0, iter(rot[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if w in index:
                    low[v] = min(low[v], index[w])
                else:
                    index[w] = low[w] = len(index)
                    stack.append((w, v, iter(rot[w])))
                    break
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > index[u]:
                        found.add(canonical_edge(u, v))
    return found


def gen_planar(cfg: GenConfig) -> PlanarGraph:
    """``gen_maximal_planar`` followed by ``cfg.deletions`` connectivity-safe edge deletions."""
    if cfg.deletions > cfg.max_deletions:
        raise GenerationError(
            f"cannot delete {cfg.deletions} edges from a {cfg.n}-node maximal planar graph "
            f"and stay connected (at most {cfg.max_deletions})")
    rng = XorShift64Star(cfg.seed)
    g = _grow(cfg, rng)
    rot = {v: list(ws) for v, ws in g.rotation.items()}
    for _ in range(cfg.deletions):
        edges = sorted({canonical_edge(u, w) for u, ws in rot.items() for w in ws})
        cut = bridges(rot)
        removable = [e for e in edges if e not in cut]
        u, w = removable[rng.below(len(removable))]
        rot[u].remove(w)
        rot[w].remove(u)
    return PlanarGraph.from_rotation(rot)
