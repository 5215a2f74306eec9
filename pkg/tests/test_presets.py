import json

import pytest

from core.errors import UnknownGraphSourceError
from core.graph import is_bipartite, is_regular
from core.sources import load_named_graph
from presets import PresetLoader, get_preset, get_presets
from presets import loader


class TestPresetLoader:
    def test_catalogue(self):
        assert PresetLoader.list_ids() == ['bowtie', 'cube', 'k33', 'petersen']
        for preset in get_presets().values():
            assert {'id', 'name', 'description', 'edges'} <= preset.keys()

    def test_get_unknown(self):
        assert get_preset('dodecahedron') is None

    @pytest.mark.parametrize("preset_id, n, m, bipartite", [
        ('petersen', 10, 15, False),
        ('cube', 8, 12, True),
        ('k33', 6, 9, True),
        ('bowtie', 5, 6, False),
    ])
    def test_named_graphs(self, preset_id, n, m, bipartite):
        g = load_named_graph(preset_id)
        assert (g.n, g.m) == (n, m)
        assert is_bipartite(g) == bipartite

    def test_regularity(self):
        assert is_regular(load_named_graph('petersen'))
        assert not is_regular(load_named_graph('bowtie'))

    def test_unknown_named_graph(self):
        with pytest.raises(UnknownGraphSourceError):
            load_named_graph('nope')

    def test_bad_files_are_skipped(self, tmp_path, monkeypatch, caplog):
        (tmp_path / "broken.json").write_text("{not json", encoding='utf-8')
        (tmp_path / "noedges.json").write_text(json.dumps({"id": "noedges"}), encoding='utf-8')
        (tmp_path / "tri.json").write_text(json.dumps({"id": "tri", "edges": [[0, 1], [1, 2], [2, 0]]}),
                                           encoding='utf-8')
        monkeypatch.setattr(loader, 'PRESETS_DIR', tmp_path)
        try:
            PresetLoader.reload()
            assert PresetLoader.list_ids() == ['tri']
            assert "broken.json" in caplog.text
        finally:
            monkeypatch.undo()
            PresetLoader.reload()
