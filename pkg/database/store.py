"""
产物存储模块
- JSON 文件读写：域、平面、平面组、齐次型、整数格、运行报告
- 原子写入（临时文件 + replace），写入后重新解析校验
- SHA-256 摘要用于报告溯源
- 路径 "-" 表示标准输出 / 标准输入
"""

import hashlib
import json
import sys
from pathlib import Path
from threading import Lock
from typing import Any, Dict, List, Optional, Union

from core.algebra.fields import FieldSpec, field_from_json
from core.algebra.polynomials import MultiPoly
from core.errors import ConstructionError, DimensionError
from core.grassmann import Plane
from core.lattices import IntLattice
from core.log import logger
from core.suite.models import RunReport
from core.tens.models import TenConfig

PathLike = Union[str, Path]

STDIO = "-"


class ArtifactStore:
    """
    JSON 产物存储

    相对路径以 root 为基准；root 为 None 时按当前目录解析。
    """

    def __init__(self, root: Optional[PathLike] = None):
        self.root = Path(root) if root is not None else None
        self._lock = Lock()

    def resolve(self, path: PathLike) -> Path:
        path = Path(path)
        if self.root is not None and not path.is_absolute():
            return self.root / path
        return path

    # ==================== 通用读写 ====================

    def read_json(self, path: PathLike) -> Any:
        """
        Raises:
            ConstructionError: 文件缺失或不是合法 JSON
        """
        if str(path) == STDIO:
            try:
                return json.load(sys.stdin)
            except json.JSONDecodeError as e:
                raise ConstructionError(f"stdin is not valid JSON: {e}", "plumbing") from e
        target = self.resolve(path)
        try:
            with open(target, "r", encoding="utf-8") as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"❌ 读取失败 {target}: {e}")
            raise ConstructionError(f"cannot read {target}: {e}", "plumbing") from e

    def write_json(self, path: PathLike, data: Any) -> Optional[Path]:
        """
        写入 JSON（键排序，保证相同输入字节一致）；"-" 写到 stdout 并返回 None

        Raises:
            ConstructionError: 写入或校验失败
        """
        try:
            text = json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True)
        except (TypeError, ValueError) as e:
            raise ConstructionError(f"cannot serialize {path}: {e}", "plumbing") from e
        if str(path) == STDIO:
            sys.stdout.write(text + "\n")
            sys.stdout.flush()
            return None

        target = self.resolve(path)
        temp = target.with_name(target.name + ".tmp")
        try:
            with self._lock:
                target.parent.mkdir(parents=True, exist_ok=True)
                with open(temp, "w", encoding="utf-8") as f:
                    f.write(text + "\n")
                with open(temp, "r", encoding="utf-8") as f:
                    json.load(f)
                temp.replace(target)
        except (OSError, ValueError) as e:
            if temp.exists():
                try:
                    temp.unlink()
                except OSError:
                    pass
            logger.error(f"❌ 写入失败 {target}: {e}")
            raise ConstructionError(f"cannot write {target}: {e}", "plumbing") from e
        logger.info(f"📦 已写入 {target}")
        return target

    def digest(self, path: PathLike) -> str:
        """文件内容的 SHA-256（十六进制）"""
        h = hashlib.sha256()
        with open(self.resolve(path), "rb") as f:
            for chunk in iter(lambda: f.read(1 << 16), b""):
                h.update(chunk)
        return h.hexdigest()

    def digests(self, paths: List[PathLike]) -> Dict[str, str]:
        return {str(p): self.digest(p) for p in paths if str(p) != STDIO and self.resolve(p).exists()}

    # ==================== 领域对象 ====================

    def load_field(self, path: PathLike) -> FieldSpec:
        return field_from_json(self.read_json(path))

    def save_field(self, path: PathLike, field: FieldSpec) -> Optional[Path]:
        return self.write_json(path, field.to_json())

    def load_plane(self, path: PathLike) -> Plane:
        data = self.read_json(path)
        return Plane.from_json(field_from_json(data["field"]), data)

    def save_plane(self, path: PathLike, plane: Plane) -> Optional[Path]:
        return self.write_json(path, {"field": plane.field.to_json(), **plane.to_json()})

    def load_ten(self, path: PathLike) -> TenConfig:
        try:
            return TenConfig.from_json(self.read_json(path))
        except (KeyError, TypeError, ValueError) as e:
            raise ConstructionError(f"malformed plane configuration {path}: {e}", "import") from e

    def save_ten(self, path: PathLike, cfg: TenConfig) -> Optional[Path]:
        return self.write_json(path, cfg.to_json())

    def load_form(self, path: PathLike, field: Optional[FieldSpec] = None) -> MultiPoly:
        """形式 JSON 自带 field 时优先使用它"""
        data = self.read_json(path)
        if "field" in data:
            field = field_from_json(data["field"])
        if field is None:
            raise DimensionError(f"form {path} carries no field and none was given")
        return MultiPoly.from_json(field, data)

    def save_form(self, path: PathLike, form: MultiPoly) -> Optional[Path]:
        return self.write_json(path, form.to_json())

    def load_gram(self, path: PathLike, label: str = "input") -> IntLattice:
        """接受 {"gram": [[...]]} 或直接的整数行数组"""
        data = self.read_json(path)
        rows = data.get("gram") if isinstance(data, dict) else data
        try:
            gram = tuple(tuple(int(x) for x in row) for row in rows)
        except (TypeError, ValueError) as e:
            raise DimensionError(f"Gram in {path} is not an integer matrix: {e}") from e
        name = data.get("label", label) if isinstance(data, dict) else label
        return IntLattice(name, gram)

    def save_lattice(self, path: PathLike, lattice: IntLattice) -> Optional[Path]:
        return self.write_json(path, lattice.to_json())

    def save_report(self, path: PathLike, report: RunReport, include_runtime: bool = True) -> Optional[Path]:
        return self.write_json(path, report.to_dict(include_runtime))
