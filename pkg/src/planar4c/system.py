"""The four-component, four-colour 0-1 linear system of a triangulation.

Variable ``x[i,j]`` is 1 when component ``i`` (a node or a bounded face)
carries colour ``j``.  Per triangle with components ``a, b, c, d`` there are

* four component equations ``x[i,1] + x[i,2] + x[i,3] + x[i,4] = 1``, one for
  each of ``a, b, c, d``, and
* four colour equations ``x[a,j] + x[b,j] + x[c,j] + x[d,j] = 1`` for
  ``j = 1..4``.

Components that lie in no triangle still get their component equation (after
all triangle blocks) so every 0-1 solution is a total colouring.

The reduced system drops each triangle's ``j = 4`` colour equation, which is
the sum of its four component equations minus the other three colour
equations, and keeps only the first copy of each component equation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Mapping, NamedTuple, Sequence

from . import linalg
from .triangulate import Triangle, Triangulation, component_ids, enumerate_triangles

COLORS = (1, 2, 3, 4)

Var = tuple[int, int]


class Equation(NamedTuple):
    kind: str  # "component" | "color"
    triangle: Triangle | None
    support: tuple[Var, ...]
    rhs: int = 1

    @property
    def key(self) -> tuple[str, tuple[Var, ...]]:
        return (self.kind, self.support)

    def format(self) -> str:
        tri = self.triangle.label() if self.triangle else "-"
        terms = " + ".join(f"x[{i},{j}]" for i, j in self.support)
        return f"{self.kind} {tri} : {terms} = {self.rhs}"


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colour labels 1..4 to components."""

    assignment: Mapping[int, int]
    faces: frozenset[int] = frozenset()

    def __getitem__(self, component: int) -> int:
        return self.assignment[component]

    def kind(self, component: int) -> str:
        return "face" if component in self.faces else "node"

    def components(self) -> list[int]:
        return sorted(self.assignment)

    def node_colors(self) -> dict[int, int]:
        return {i: c for i, c in self.assignment.items() if i not in self.faces}

    def format(self) -> str:
        return "".join(f"component {i} kind {self.kind(i)} color {self[i]}\n"
                       for i in self.components())


@dataclass(frozen=True)
class LinearSystem:
    num_components: int
    rows: tuple[Equation, ...]
    triangles: tuple[Triangle, ...] = ()
    node_map: Mapping[int, int] = field(default_factory=dict)

    @property
    def num_variables(self) -> int:
        return 4 * self.num_components

    @property
    def num_nodes(self) -> int:
        return len(self.node_map)

    @property
    def faces(self) -> frozenset[int]:
        return frozenset(t.face for t in self.triangles)

    def column(self, var: Var) -> int:
        i, j = var
        return 4 * (i - 1) + (j - 1)

    def sparse_rows(self) -> list[dict[int, int]]:
        return [{self.column(v): 1 for v in eq.support} for eq in self.rows]

    def remapped(self) -> bool:
        return any(k != v for k, v in self.node_map.items())

    def format(self) -> str:
        return "".join(eq.format() + "\n" for eq in self.rows)


def component_equation(i: int, tri: Triangle | None) -> Equation:
    return Equation("component", tri, ((i, 1), (i, 2), (i, 3), (i, 4)))


def color_equation(tri: Triangle, j: int) -> Equation:
    a, b, c, d = tri
    return Equation("color", tri, ((a, j), (b, j), (c, j), (d, j)))


def build_full_system(t: Triangulation) -> LinearSystem:
    triangles = enumerate_triangles(t)
    node_map, _ = component_ids(t.graph.nodes, len(triangles))
    num_components = t.graph.num_nodes + len(triangles)
    rows: list[Equation] = []
    covered: set[int] = set()
    # a node's component support is shared by every triangle it lies in
    supports = {i: component_equation(i, None).support for i in range(1, num_components + 1)}
    for tri in triangles:
        for i in tri:
            rows.append(Equation("component", tri, supports[i]))
        for j in COLORS:
            rows.append(color_equation(tri, j))
        covered.update(tri)
    rows.extend(component_equation(i, None)
                for i in range(1, num_components + 1) if i not in covered)
    return LinearSystem(num_components, tuple(rows), tuple(triangles), node_map)


def reduce_system(s: LinearSystem) -> LinearSystem:
    seen = set()
    kept = []
    for eq in s.rows:
        if eq.kind == "color" and eq.support[0][1] == 4:
            continue
        if eq.kind == "component":
            if eq.key in seen:
                continue
            seen.add(eq.key)
        kept.append(eq)
    return LinearSystem(s.num_components, tuple(kept), s.triangles, s.node_map)


def kept_per_triangle(s: LinearSystem) -> list[int]:
    counts = {t: 0 for t in s.triangles}
    for eq in s.rows:
        if eq.triangle is not None:
            counts[eq.triangle] += 1
    return [counts[t] for t in s.triangles]


def rank_exact(s: LinearSystem) -> tuple[int, int]:
    """(rank, nullity) over the rationals, computed with integers only.

    Face columns are eliminated first: a face's variables occur only in its
    own triangle, which keeps fill-in local.
    """
    faces = s.faces
    order = sorted(faces) + [i for i in range(1, s.num_components + 1) if i not in faces]
    position = {i: k for k, i in enumerate(order)}
    rows = [{4 * position[i] + j - 1: 1 for i, j in eq.support} for eq in s.rows]
    r = linalg.rank(rows)
    return r, s.num_variables - r


def residual(s: LinearSystem, x: Sequence[Fraction | int]) -> Fraction:
    """Exact ``max |row . x - rhs|`` over the rows (0 for an empty system)."""
    if len(x) != s.num_variables:
        raise ValueError(f"vector has {len(x)} entries, system has {s.num_variables} variables")
    # vectors usually repeat a few objects, so convert each object once
    ids = list(map(id, x))
    values = {k: Fraction(v) for k, v in dict(zip(ids, x)).items()}
    den = lcm(1, *{f.denominator for f in values.values()})
    table = {k: f.numerator * (den // f.denominator) for k, f in values.items()}
    scaled = list(map(table.__getitem__, ids))
    worst = 0
    for eq in s.rows:
        lhs = 0
        for i, j in eq.support:
            lhs += scaled[4 * i + j - 5]
        worst = max(worst, abs(lhs - eq.rhs * den))
    return Fraction(worst, den)


def uniform_witness(s: LinearSystem) -> list[Fraction]:
    return [Fraction(1, 4)] * s.num_variables


def coloring_to_vector(c: Coloring) -> list[int]:
    comps = c.components()
    if comps != list(range(1, len(comps) + 1)):
        raise ValueError("coloring must cover components 1..N exactly")
    x = [0] * (4 * len(comps))
    for i in comps:
        label = c[i]
        if label not in COLORS:
            raise ValueError(f"component {i} has colour {label}, expected 1..4")
        x[4 * (i - 1) + label - 1] = 1
    return x


def vector_to_coloring(x: Sequence[Fraction | int], faces: frozenset[int] = frozenset()) -> Coloring:
    if len(x) % 4:
        raise ValueError(f"vector length {len(x)} is not a multiple of 4")
    assignment = {}
    for k in range(len(x) // 4):
        block = x[4 * k:4 * k + 4]
        if any(v not in (0, 1) for v in block) or sum(block) != 1:
            raise ValueError(f"component {k + 1} is not a unit block: {list(block)}")
        assignment[k + 1] = 1 + [int(v) for v in block].index(1)
    return Coloring(assignment, frozenset(faces))
