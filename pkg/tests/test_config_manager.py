"""
配置管理器：默认文件复制、损坏保护与基线冻结
"""

import json
from pathlib import Path

import pytest

from core import ConfigManager

DEFAULT_DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def manager(tmp_path):
    return ConfigManager(tmp_path / "runtime", DEFAULT_DATA)


def test_defaults_are_copied(manager, tmp_path):
    assert (tmp_path / "runtime" / "suite.json").exists()
    assert manager.suite.seed == 0
    assert "reye" in manager.suite.recipes
    assert manager.baseline == {}


def test_freeze_merges_and_persists(manager, tmp_path):
    assert manager.freeze({"winger_prime": 43, "three_conic_tangent_rank": None})
    assert manager.frozen("winger_prime") == 43
    assert manager.frozen("three_conic_tangent_rank") is None

    assert manager.freeze({"three_conic_matching": [0, 1, 2]})
    reloaded = ConfigManager(tmp_path / "runtime", DEFAULT_DATA)
    assert reloaded.baseline == {"winger_prime": 43, "three_conic_matching": [0, 1, 2]}


def test_get_returns_a_copy(manager):
    manager.get("baseline")["x"] = 1
    assert "x" not in manager.baseline


def test_corrupted_file_blocks_saving(tmp_path):
    runtime = tmp_path / "runtime"
    runtime.mkdir()
    (runtime / "baseline.json").write_text("{broken", encoding="utf-8")

    manager = ConfigManager(runtime, DEFAULT_DATA)
    assert manager.is_corrupted("baseline")
    assert not manager.save("baseline", {"winger_prime": 43})
    assert (runtime / "baseline.json").read_text(encoding="utf-8") == "{broken"

    assert manager.clear_corrupted_flag("baseline")
    assert not manager.clear_corrupted_flag("baseline")
    assert manager.save("baseline", {"winger_prime": 43})
    assert json.loads((runtime / "baseline.json").read_text(encoding="utf-8")) == {"winger_prime": 43}


def test_reload_keeps_old_cache_on_corruption(manager, tmp_path):
    manager.freeze({"winger_prime": 43})
    (tmp_path / "runtime" / "baseline.json").write_text("[1, 2]", encoding="utf-8")
    manager.reload_all()
    assert manager.is_corrupted("baseline")
    assert manager.frozen("winger_prime") == 43


def test_unknown_config_name(manager):
    assert not manager.save("planes", {})
