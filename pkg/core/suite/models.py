"""
验收套件数据模型
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from ..constants import PLUMBING, TOOLKIT_VERSION
from ..errors import DimensionError


class CheckStatus(Enum):
    """单项检查状态"""
    PASS = "pass"
    FAIL = "fail"
    PARTIAL = "partial"   # 只记录观测值（例如部分证书、未冻结的基线值）


BLOCKS = ("three_conic", "coble", "lattice", "morin", "epw", "algebra")


@dataclass
class CheckRecord:
    """一项检查的结果"""
    check_id: str
    citation: str
    status: CheckStatus
    observed: Dict[str, Any] = field(default_factory=dict)
    runtime: float = 0.0
    message: str = ""

    def to_dict(self, include_runtime: bool = True) -> Dict[str, Any]:
        data = {
            "id": self.check_id,
            "citation": self.citation or PLUMBING,
            "status": self.status.value,
            "observed": self.observed,
        }
        if self.message:
            data["message"] = self.message
        if include_runtime:
            data["runtime"] = round(self.runtime, 3)
        return data


@dataclass
class SuiteConfig:
    """
    套件配置（suite.json）

    recipes: 额外构造并验证的十平面（3331 / morin13 / reye / random）
    imports: 外部平面组 JSON 文件路径
    blocks: 只运行这些块（None 表示全部）
    """
    seed: int = 0
    budget: int = 10_000_000
    recipes: List[str] = field(default_factory=list)
    imports: List[str] = field(default_factory=list)
    blocks: Optional[List[str]] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SuiteConfig":
        blocks = data.get("blocks")
        if blocks is not None:
            unknown = [b for b in blocks if b not in BLOCKS]
            if unknown:
                raise DimensionError(f"unknown suite blocks {unknown}", expected=list(BLOCKS), actual=blocks)
        return cls(
            seed=int(data.get("seed", 0)),
            budget=int(data.get("budget", 10_000_000)),
            recipes=list(data.get("recipes", [])),
            imports=[str(p) for p in data.get("imports", [])],
            blocks=list(blocks) if blocks is not None else None,
        )

    def to_dict(self) -> Dict[str, Any]:
        data = {"seed": self.seed, "budget": self.budget, "recipes": self.recipes, "imports": self.imports}
        if self.blocks is not None:
            data["blocks"] = self.blocks
        return data

    @property
    def active_blocks(self) -> List[str]:
        return [b for b in BLOCKS if self.blocks is None or b in self.blocks]


@dataclass
class RunReport:
    """整次运行的报告；检查 id 唯一"""
    seed: int
    version: str = TOOLKIT_VERSION
    input_digests: Dict[str, str] = field(default_factory=dict)
    records: List[CheckRecord] = field(default_factory=list)
    frozen: Dict[str, Any] = field(default_factory=dict)

    def add(self, record: CheckRecord) -> None:
        if any(r.check_id == record.check_id for r in self.records):
            raise DimensionError(f"duplicate check id {record.check_id}")
        self.records.append(record)

    def get(self, check_id: str) -> Optional[CheckRecord]:
        return next((r for r in self.records if r.check_id == check_id), None)

    @property
    def failures(self) -> List[CheckRecord]:
        return [r for r in self.records if r.status is CheckStatus.FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> Dict[str, int]:
        counts = {s.value: 0 for s in CheckStatus}
        for r in self.records:
            counts[r.status.value] += 1
        return counts

    def to_dict(self, include_runtime: bool = True) -> Dict[str, Any]:
        return {
            "version": self.version,
            "seed": self.seed,
            "input_digests": dict(sorted(self.input_digests.items())),
            "summary": self.summary(),
            "passed": self.passed,
            "frozen": self.frozen,
            "checks": [r.to_dict(include_runtime) for r in self.records],
        }
