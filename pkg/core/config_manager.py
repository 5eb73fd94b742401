"""
套件配置与冻结基线

运行时目录中的两个 JSON 文档：suite.json（种子、预算、配方、导入、检查块）
和 baseline.json（冻结的观测值）。文档解析失败时沿用上一次的内容并禁止写回。
"""

import json
import shutil
import time
from dataclasses import dataclass
from pathlib import Path
from threading import Lock
from typing import Any, Dict, Optional

from .log import logger
from .suite.models import SuiteConfig


class ConfigLoadError(Exception):
    """文档第一次读取就失败，没有可沿用的内容"""

    def __init__(self, config_name: str, filepath: Path, original_error: Exception):
        self.config_name = config_name
        self.filepath = filepath
        self.original_error = original_error
        super().__init__(f"{config_name} document {filepath} is unreadable: {original_error}")


@dataclass
class _Document:
    path: Path
    data: Optional[Dict[str, Any]] = None
    loaded_at: float = 0.0
    corrupted: bool = False


class ConfigManager:
    """
    suite / baseline 两个文档的读写

    - 运行时目录缺文件时从 default_<name>.json 复制
    - 读到非法 JSON 时标记损坏：内存中保留旧内容，save 一律拒绝
    - 写入走 .json.tmp 再 replace，替换前重新解析一遍
    """

    CONFIG_FILES = {
        "suite": "suite.json",
        "baseline": "baseline.json",
    }

    def __init__(self, data_path: Path, default_data_path: Path):
        """
        Args:
            data_path: 运行时目录，suite.json / baseline.json 在这里读写
            default_data_path: 随包提供的 default_*.json 所在目录
        """
        self.data_path = Path(data_path)
        self.default_data_path = Path(default_data_path)
        self.data_path.mkdir(parents=True, exist_ok=True)
        self._lock = Lock()
        self._docs = {name: _Document(self.data_path / fname) for name, fname in self.CONFIG_FILES.items()}

        self._seed_from_defaults()
        self.reload_all()

    def _seed_from_defaults(self) -> None:
        for name, doc in self._docs.items():
            shipped = self.default_data_path / f"default_{self.CONFIG_FILES[name]}"
            if shipped.exists() and not doc.path.exists():
                shutil.copy(shipped, doc.path)
                logger.info(f"📦 已从 {shipped.name} 初始化 {doc.path}")

    def path_of(self, config_name: str) -> Path:
        return self._docs[config_name].path

    # ==================== 读取 ====================

    def reload_all(self) -> None:
        with self._lock:
            for name in self._docs:
                try:
                    self._read(name)
                except ConfigLoadError as e:
                    logger.error(f"❌ {e}")

    def _read(self, name: str) -> Dict[str, Any]:
        """
        Raises:
            ConfigLoadError: 文档损坏且此前从未读到过有效内容
        """
        doc = self._docs[name]
        if not doc.path.exists():
            logger.warning(f"⚠️ {name} 文档不存在，按空文档处理: {doc.path}")
            doc.data = {}
            return doc.data
        try:
            loaded = json.loads(doc.path.read_text(encoding="utf-8"))
            if not isinstance(loaded, dict):
                raise ValueError(f"expected a JSON object, got {type(loaded).__name__}")
        except (OSError, ValueError) as e:
            doc.corrupted = True
            logger.error(f"❌ {name} 文档无法解析 {doc.path}: {e}")
            if doc.data is None:
                raise ConfigLoadError(name, doc.path, e) from e
            logger.warning(f"⚠️ {name} 沿用上次读到的内容，写回已禁用")
            return doc.data
        doc.data, doc.loaded_at, doc.corrupted = loaded, time.time(), False
        logger.debug(f"🔍 {name}: {sorted(loaded)}")
        return loaded

    def get(self, config_name: str) -> Dict[str, Any]:
        with self._lock:
            doc = self._docs.get(config_name)
            return dict(doc.data or {}) if doc else {}

    def is_corrupted(self, config_name: str) -> bool:
        doc = self._docs.get(config_name)
        return bool(doc and doc.corrupted)

    def clear_corrupted_flag(self, config_name: str) -> bool:
        """文件已手动修好时调用（不会重新读取）"""
        doc = self._docs.get(config_name)
        if doc is None or not doc.corrupted:
            return False
        doc.corrupted = False
        logger.info(f"✅ {config_name} 的损坏标记已清除")
        return True

    # ==================== 写入 ====================

    def save(self, config_name: str, data: Dict[str, Any]) -> bool:
        doc = self._docs.get(config_name)
        if doc is None:
            logger.error(f"❌ 未知文档 {config_name}")
            return False
        if doc.corrupted:
            logger.error(f"🛡️ {config_name} 文档读取失败过，拒绝覆盖 {doc.path}")
            return False

        staging = doc.path.with_name(doc.path.name + ".tmp")
        try:
            with self._lock:
                staging.write_text(json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True),
                                   encoding="utf-8")
                json.loads(staging.read_text(encoding="utf-8"))
                staging.replace(doc.path)
                doc.data, doc.loaded_at = dict(data), time.time()
        except (OSError, TypeError, ValueError) as e:
            logger.error(f"❌ {config_name} 写入失败: {e}")
            staging.unlink(missing_ok=True)
            return False
        return True

    def freeze(self, values: Dict[str, Any]) -> bool:
        """本次观测值并入 baseline；None 值跳过，已有键被覆盖"""
        merged = self.baseline
        changed = {k: v for k, v in values.items() if v is not None and merged.get(k) != v}
        if not changed:
            logger.info("🔍 基线无变化")
            return True
        merged.update(changed)
        ok = self.save("baseline", merged)
        if ok:
            logger.info(f"💾 已冻结基线: {sorted(changed)}")
        return ok

    # ==================== 便捷属性 ====================

    @property
    def suite(self) -> SuiteConfig:
        return SuiteConfig.from_dict(self.get("suite"))

    @property
    def baseline(self) -> Dict[str, Any]:
        return self.get("baseline")

    def frozen(self, key: str, default: Optional[Any] = None) -> Any:
        return self.baseline.get(key, default)
