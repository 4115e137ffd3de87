"""Independent checks of colourings and the audit report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .graph import PlanarGraph
from .solver import SearchConfig, SearchError, solve
from .system import (
    Coloring,
    build_full_system,
    rank_exact,
    reduce_system,
    residual,
    uniform_witness,
)
from .triangulate import Triangulation, component_ids, enumerate_triangles

RANK_NOTE = ("rank does not imply integrality: the uniform 1/4 vector solves the reduced "
             "system, so integer feasibility is established by search only")
OUTER_NOTE = "outer face left as is: only bounded faces are triangulated and become components"


class VerificationError(ValueError):
    pass


def node_map_for(t: Triangulation) -> dict[int, int]:
    node_map, _ = component_ids(t.graph.nodes, len(enumerate_triangles(t)))
    return node_map


def verify_proper(g: PlanarGraph, c: Coloring | Mapping[int, int],
                  node_map: Mapping[int, int] | None = None) -> bool:
    """True iff no edge of ``g`` joins two nodes of the same colour.

    ``node_map`` translates node ids to component ids (identity by default).
    """
    ids = node_map or {v: v for v in g.nodes}
    colors = c.assignment if isinstance(c, Coloring) else c
    missing = [v for v in g.nodes if ids[v] not in colors]
    if missing:
        raise VerificationError(f"coloring misses node(s) {missing}")
    return all(colors[ids[u]] != colors[ids[v]] for u, v in g.edges)


def verify_lemma2(t: Triangulation, c: Coloring) -> bool:
    """True iff every triangle uses each of the four labels exactly once."""
    for tri in enumerate_triangles(t):
        missing = [i for i in tri.components if i not in c.assignment]
        if missing:
            raise VerificationError(f"coloring misses component(s) {missing}")
        if sorted(c[i] for i in tri.components) != [1, 2, 3, 4]:
            return False
    return True


def verify_lemma1(t: Triangulation, c: Coloring) -> bool:
    """Restrict a proper colouring of the triangulation to the original graph.

    Deleting edges cannot make a proper colouring improper, so False here
    means a bug upstream, and the error says so.
    """
    node_map = node_map_for(t)
    if not verify_proper(t.graph, c, node_map):
        raise VerificationError("coloring is not proper on the triangulated graph")
    restricted = t.graph.without_edges(t.added_edges)
    if not restricted.same_structure(t.original):
        raise VerificationError("removing the added edges does not give back the original graph")
    ok = verify_proper(restricted, c, node_map)
    if not ok:
        raise VerificationError("restriction of a proper coloring became improper: implementation bug")
    return ok


@dataclass
class AuditReport:
    variables: int
    full_rows: int
    reduced_rows: int
    rank: int
    nullity: int
    nullity_expected: int
    lemma3_holds: bool
    fractional_witness: dict
    integer_solution_found: bool
    coloring: dict[int, int] | None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        data = dict(vars(self))
        if self.coloring is not None:
            data["coloring"] = {str(k): v for k, v in self.coloring.items()}
        return json.dumps(data, indent=2) + "\n"

    def to_text(self) -> str:
        w = self.fractional_witness
        lines = [
            f"variables {self.variables}",
            f"full_rows {self.full_rows}",
            f"reduced_rows {self.reduced_rows}",
            f"rank {self.rank}",
            f"nullity {self.nullity}",
            f"nullity_expected {self.nullity_expected}",
            f"lemma3_holds {str(self.lemma3_holds).lower()}",
            f"fractional_witness value={w['value']} length={w['length']} "
            f"residual={w['residual']} integral={str(w['integral']).lower()}",
            f"integer_solution_found {str(self.integer_solution_found).lower()}",
        ]
        if self.coloring is None:
            lines.append("coloring none")
        else:
            lines.append("coloring " + " ".join(f"{k}:{v}" for k, v in self.coloring.items()))
        lines.extend(f"note {n}" for n in self.notes)
        return "\n".join(lines) + "\n"


def audit(t: Triangulation, cfg: SearchConfig = SearchConfig()) -> AuditReport:
    full = build_full_system(t)
    reduced = reduce_system(full)
    rank, nullity = rank_exact(reduced)
    holds = rank == len(reduced.rows)
    witness = uniform_witness(reduced)
    frac = {
        "value": "1/4",
        "length": len(witness),
        "residual": str(residual(reduced, witness)),
        "integral": all(v.denominator == 1 for v in witness),
    }
    notes = []
    verdict = "verified" if holds else "counterexample"
    notes.append(f"rank claim {verdict}: rows={len(reduced.rows)} rank={rank}")
    if not holds:
        notes.append("rank counterexample system: " + " | ".join(eq.format() for eq in reduced.rows))
    coloring = None
    try:
        found = solve(t, cfg)
    except SearchError as exc:
        notes.append(f"integer solution not found: {exc}")
    else:
        x = [0] * full.num_variables
        for i, lab in found.assignment.items():
            x[4 * (i - 1) + lab - 1] = 1
        if residual(full, x) == 0 and residual(reduced, x) == 0:
            coloring = dict(found.assignment)
            notes.append("integer solution found by search")
        else:
            notes.append("integer solution not found: search result violates the system")
    notes.append(RANK_NOTE)
    notes.append(OUTER_NOTE)
    if reduced.remapped():
        notes.append("node ids renumbered: " + " ".join(
            f"{k}->{v}" for k, v in sorted(reduced.node_map.items())))
    return AuditReport(
        variables=reduced.num_variables,
        full_rows=len(full.rows),
        reduced_rows=len(reduced.rows),
        rank=rank,
        nullity=nullity,
        nullity_expected=3 * t.graph.num_nodes,
        lemma3_holds=holds,
        fractional_witness=frac,
        integer_solution_found=coloring is not None,
        coloring=coloring,
        notes=notes,
    )
