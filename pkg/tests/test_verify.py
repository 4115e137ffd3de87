import json

import pytest

from planar4c.graph import PlanarGraph
from planar4c.solver import SearchConfig, solve
from planar4c.system import Coloring
from planar4c.triangulate import triangulate
from planar4c.verify import (
    OUTER_NOTE,
    RANK_NOTE,
    AuditReport,
    VerificationError,
    audit,
    verify_lemma1,
    verify_lemma2,
    verify_proper,
)

FIG1_NODES = {1: 1, 2: 2, 3: 3, 5: 2, 7: 1}
FIG1_FACES = frozenset({4, 6, 8, 9})


def fig1_coloring(**faces) -> Coloring:
    labels = {4: 4, 6: 4, 8: 4, 9: 4}
    labels.update({int(k[1:]): v for k, v in faces.items()})
    return Coloring(dict(sorted({**FIG1_NODES, **labels}.items())), FIG1_FACES)


class TestProper:
    def test_mapping_input(self, k3):
        assert verify_proper(k3, {1: 1, 2: 2, 3: 3})
        assert not verify_proper(k3, {1: 1, 2: 1, 3: 3})

    def test_missing_node(self, k3):
        with pytest.raises(VerificationError, match="misses node"):
            verify_proper(k3, {1: 1, 2: 2})

    def test_node_map(self):
        g = PlanarGraph.from_edges([(10, 20)])
        assert verify_proper(g, {1: 1, 2: 2}, {10: 1, 20: 2})


class TestLemma2:
    def test_holds(self, fig1b):
        assert verify_lemma2(fig1b, fig1_coloring())

    def test_repeated_label(self, fig1b):
        assert not verify_lemma2(fig1b, fig1_coloring(f9=1))

    def test_missing_face(self, fig1b):
        c = fig1_coloring()
        partial = Coloring({k: v for k, v in c.assignment.items() if k != 9}, FIG1_FACES)
        with pytest.raises(VerificationError, match="misses component"):
            verify_lemma2(fig1b, partial)


class TestLemma1:
    def test_restriction(self, fig1b):
        assert verify_lemma1(fig1b, fig1_coloring())

    def test_improper_on_triangulation(self, fig1b):
        # 1 and 3 are only adjacent through the added chord
        nodes = {**FIG1_NODES, 3: 1, 7: 3}
        c = Coloring(dict(sorted({**nodes, 4: 4, 6: 4, 8: 4, 9: 4}.items())), FIG1_FACES)
        assert verify_proper(fig1b.original, c)
        with pytest.raises(VerificationError, match="not proper"):
            verify_lemma1(fig1b, c)


class TestAudit:
    def test_fig1(self, fig1b):
        r = audit(fig1b, SearchConfig("input-order"))
        assert (r.variables, r.full_rows, r.reduced_rows) == (36, 32, 21)
        assert (r.rank, r.nullity, r.nullity_expected) == (21, 15, 15)
        assert r.lemma3_holds and r.integer_solution_found
        assert r.coloring == fig1_coloring().assignment
        assert r.fractional_witness == {"value": "1/4", "length": 36, "residual": "0", "integral": False}
        assert RANK_NOTE in r.notes and OUTER_NOTE in r.notes
        assert "rank claim verified: rows=21 rank=21" in r.notes

    def test_single_triangle(self, k3):
        r = audit(triangulate(k3))
        assert (r.variables, r.full_rows, r.reduced_rows, r.rank, r.nullity) == (16, 8, 7, 7, 9)

    def test_forest(self, path3):
        r = audit(triangulate(path3))
        assert (r.variables, r.full_rows, r.reduced_rows, r.rank, r.nullity) == (12, 3, 3, 3, 9)
        assert r.lemma3_holds and r.nullity == r.nullity_expected
        # no triangle: the uniform vector is still fractional
        assert r.fractional_witness["integral"] is False

    def test_step_limit_reported(self, fig1b):
        # one expansion cannot colour five nodes
        r = audit(fig1b, SearchConfig(step_limit=1))
        assert not r.integer_solution_found and r.coloring is None
        assert any(n.startswith("integer solution not found") for n in r.notes)
        assert "coloring none" in r.to_text()

    def test_renumbering_note(self):
        g = PlanarGraph.from_rotation({10: [20, 30], 20: [30, 10], 30: [10, 20]})
        r = audit(triangulate(g))
        assert "node ids renumbered: 10->1 20->2 30->3" in r.notes

    def test_json_round_trip(self, fig1b):
        r = audit(fig1b)
        data = json.loads(r.to_json())
        assert list(data) == list(AuditReport.__dataclass_fields__)
        assert data["coloring"] == {str(k): v for k, v in r.coloring.items()}

    def test_text(self, fig1b):
        lines = audit(fig1b, SearchConfig("input-order")).to_text().splitlines()
        assert lines[:9] == [
            "variables 36",
            "full_rows 32",
            "reduced_rows 21",
            "rank 21",
            "nullity 15",
            "nullity_expected 15",
            "lemma3_holds true",
            "fractional_witness value=1/4 length=36 residual=0 integral=false",
            "integer_solution_found true",
        ]
        assert lines[9] == "coloring 1:1 2:2 3:3 4:4 5:2 6:4 7:1 8:4 9:4"
