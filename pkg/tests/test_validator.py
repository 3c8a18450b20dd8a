"""Coloring model and the proper / equitable / dominator checks"""

import pytest

from graphs.coloring import Coloring
from graphs.models import build_graph
from services.validator import (
    class_sizes, dominated_classes, is_equitable, is_proper, undominated_vertices, validate_edc,
)
from utils.exceptions import InvalidColoring, SizeMismatch, VertexOutOfRange


class TestColoring:
    def test_from_colors_infers_k(self):
        c = Coloring.from_colors([1, 2, 1, 3])
        assert c.k == 3
        assert c.classes() == [[0, 2], [1], [3]]

    def test_empty_class_rejected(self):
        with pytest.raises(InvalidColoring):
            Coloring(3, (1, 1, 2))

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidColoring):
            Coloring(2, (1, 3))

    def test_json(self):
        c = Coloring(2, (1, 2, 1))
        assert c.to_dict() == {"k": 2, "colors": [1, 2, 1]}
        assert Coloring.from_dict(c.to_dict()) == c

    def test_malformed_json(self):
        with pytest.raises(InvalidColoring):
            Coloring.from_dict({"colors": [1]})


class TestChecks:
    def test_cycle_three_coloring(self, cycle6):
        c = Coloring(3, (1, 2, 3, 1, 2, 3))
        report = validate_edc(cycle6, c)
        assert report.proper
        assert report.equitable
        assert not report.dominator
        assert not report.overall
        assert report.undominated_vertices == list(range(6))

    def test_cycle_four_coloring(self, cycle6):
        report = validate_edc(cycle6, Coloring(4, (1, 2, 3, 4, 2, 3)))
        assert report.overall
        assert report.class_sizes == [1, 1, 2, 2]

    def test_monochromatic_edges_reported(self, path3):
        proper, clashes = is_proper(path3, Coloring(1, (1, 1, 1)))
        assert not proper
        assert clashes == [(0, 1), (1, 2)]

    def test_dominated_classes(self, path3):
        c = Coloring(2, (1, 2, 1))
        assert dominated_classes(path3, c, 0) == {2}
        assert dominated_classes(path3, c, 1) == {1, 2}
        with pytest.raises(VertexOutOfRange):
            dominated_classes(path3, c, 5)

    def test_equitable(self):
        assert is_equitable(Coloring(2, (1, 2, 1)))
        assert not is_equitable(Coloring(2, (1, 1, 1, 2)))
        assert class_sizes(Coloring(2, (1, 1, 1, 2))) == [1, 3]

    def test_size_mismatch(self, path3):
        with pytest.raises(SizeMismatch):
            validate_edc(path3, Coloring(2, (1, 2)))

    def test_all_singletons_always_pass(self, cycle6):
        assert validate_edc(cycle6, Coloring(6, tuple(range(1, 7)))).overall

    def test_edgeless_needs_singletons(self):
        g = build_graph(3, [])
        assert undominated_vertices(g, Coloring(2, (1, 2, 1))) == [0, 2]

    def test_report_json(self, path3):
        data = validate_edc(path3, Coloring(2, (1, 2, 1))).to_dict()
        assert list(data) == [
            "proper", "monochromatic_edges", "equitable", "class_sizes",
            "dominator", "undominated_vertices", "overall",
        ]
        assert data["overall"] is True
