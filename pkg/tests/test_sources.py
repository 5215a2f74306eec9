import json

import pytest

from core.errors import GraphError, UnknownGraphSourceError
from core.graph import format_edge_list
from core.sources import graph_size_hint, parse_complex_point, resolve_graph_source


class TestFamilySources:
    @pytest.mark.parametrize("source, name, n, m", [
        ("complete:5", "K_5", 5, 10),
        ("cycle:7", "C_7", 7, 7),
        ("star:4", "S_4", 4, 3),
        ("path:3", None, 3, 2),
        ("bipartite:2,3", None, 5, 6),
        ("named:petersen", "Petersen", 10, 15),
        ("  COMPLETE:3 ", "K_3", 3, 3),
    ])
    def test_resolves(self, source, name, n, m):
        g = resolve_graph_source(source)
        assert (g.n, g.m) == (n, m)
        if name is not None:
            assert g.name == name

    def test_random_uses_given_seed(self):
        a = resolve_graph_source("random:8,3", seed=5)
        b = resolve_graph_source("random:8,3,5")
        assert a.edges == b.edges
        assert a.m == 7 + 3

    def test_unknown_preset(self):
        with pytest.raises(UnknownGraphSourceError):
            resolve_graph_source("named:dodecahedron")

    def test_unknown_source(self):
        with pytest.raises(UnknownGraphSourceError):
            resolve_graph_source("hypercube:3")


class TestFileSources:
    def test_edge_list_file(self, tmp_path, k4):
        path = tmp_path / "k4.txt"
        path.write_text(format_edge_list(k4), encoding='utf-8')
        g = resolve_graph_source(str(path))
        assert (g.n, g.m) == (4, 6)

    def test_json_file(self, tmp_path):
        path = tmp_path / "triangle.json"
        path.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]}), encoding='utf-8')
        g = resolve_graph_source(str(path))
        assert g.name == "triangle"
        assert g.m == 3

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding='utf-8')
        with pytest.raises(GraphError):
            resolve_graph_source(str(path))

    def test_edge_list_not_utf8(self, tmp_path):
        path = tmp_path / "latin1.txt"
        path.write_bytes("# caf\xe9\n0 1\n".encode("latin-1"))
        with pytest.raises(GraphError, match="not valid UTF-8"):
            resolve_graph_source(str(path))

    def test_files_can_be_refused(self, tmp_path, k4):
        path = tmp_path / "k4.txt"
        path.write_text(format_edge_list(k4), encoding='utf-8')
        with pytest.raises(UnknownGraphSourceError):
            resolve_graph_source(str(path), allow_files=False)


class TestSizeHint:
    @pytest.mark.parametrize("source, size", [
        ("complete:200", (200, 39800)),
        ("cycle:7", (7, 14)),
        ("star:5", (5, 8)),
        ("path:5", (5, 8)),
        ("bipartite:3,4", (7, 24)),
        ("random:12,4,1", (12, 30)),
        ("random:4,100", (4, 12)),
        ("named:petersen", None),
        ("graph.txt", None),
    ])
    def test_size_hint(self, source, size):
        assert graph_size_hint(source) == size

    def test_size_hint_bounds_random_graphs(self):
        for extra in (0, 3, 50):
            n, arcs = graph_size_hint(f"random:9,{extra},3")
            g = resolve_graph_source(f"random:9,{extra},3")
            assert g.n == n
            assert 2 * g.m <= arcs


class TestComplexPoint:
    @pytest.mark.parametrize("text, value", [
        ("0.5,0.25", complex(0.5, 0.25)),
        ("-1e-3, 2", complex(-1e-3, 2)),
        ("0.5", complex(0.5, 0)),
        (".5,-.5", complex(0.5, -0.5)),
    ])
    def test_parse(self, text, value):
        assert parse_complex_point(text) == value

    @pytest.mark.parametrize("text", ["", "a,b", "1,2,3", "1+2j"])
    def test_invalid(self, text):
        with pytest.raises(ValueError):
            parse_complex_point(text)
