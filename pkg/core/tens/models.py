"""
十平面配置数据模型

定义平面配置、来源记录与关联报告。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..algebra.fields import FieldSpec, field_from_json
from ..grassmann import Plane


@dataclass
class Provenance:
    """
    配置来源

    recipe 为构造名（3331 / morin13 / reye / random / coble_septic / import 等），
    extra 记录构造过程中的选择（匹配下标、素数等）。
    """
    recipe: str
    seed: Optional[int] = None
    source: str = ""
    extra: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        data = {"recipe": self.recipe, "seed": self.seed, "source": self.source}
        if self.extra:
            data["extra"] = self.extra
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Provenance":
        return cls(
            recipe=data.get("recipe", "import"),
            seed=data.get("seed"),
            source=data.get("source", ""),
            extra=dict(data.get("extra", {})),
        )


@dataclass
class TenConfig:
    """有序平面组（N = 10 或 13）"""
    field: FieldSpec
    planes: Tuple[Plane, ...]
    provenance: Provenance

    def __post_init__(self):
        self.planes = tuple(self.planes)

    def __len__(self) -> int:
        return len(self.planes)

    @property
    def pluckers(self) -> List[Tuple]:
        return [p.plucker for p in self.planes]

    def planes_distinct(self) -> bool:
        canon = [p.canonical_rows() for p in self.planes]
        return len(set(canon)) == len(canon)

    def apply_transform(self, g) -> "TenConfig":
        return TenConfig(self.field, tuple(p.apply_transform(g) for p in self.planes), self.provenance)

    def to_json(self) -> Dict[str, Any]:
        return {
            "field": self.field.to_json(),
            "planes": [p.to_json()["rows"] for p in self.planes],
            "provenance": self.provenance.to_dict(),
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "TenConfig":
        fld = field_from_json(data["field"])
        planes = []
        for entry in data["planes"]:
            rows = entry["rows"] if isinstance(entry, dict) else entry
            planes.append(Plane.from_json(fld, {"rows": rows}))
        return cls(fld, tuple(planes), Provenance.from_dict(data.get("provenance", {})))


@dataclass
class IncidenceReport:
    """
    关联报告

    dims[i][j] 为 Λ_i ∩ Λ_j 的射影维数（对角线记 2）；
    points 只收录维数为 0 的对 (i, j) 的交点。
    """
    size: int
    dims: List[List[int]]
    points: Dict[Tuple[int, int], Tuple] = field(default_factory=dict)
    planes_distinct: bool = True
    all_incident: bool = False
    points_distinct: bool = False
    span_dimension: int = 0
    isotropic: bool = False
    nonzero_pairings: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def incident_pairs(self) -> int:
        return sum(1 for i in range(self.size) for j in range(i + 1, self.size) if self.dims[i][j] >= 0)

    @property
    def total_pairs(self) -> int:
        return self.size * (self.size - 1) // 2

    @property
    def lagrangian_spanning(self) -> bool:
        return self.size == 10 and self.span_dimension == 10 and self.isotropic and self.all_incident

    def to_dict(self, field: FieldSpec = None) -> Dict[str, Any]:
        def enc(pt):
            return [field.scalar_to_json(x) for x in pt] if field else list(pt)

        return {
            "size": self.size,
            "dims": self.dims,
            "incident_pairs": self.incident_pairs,
            "total_pairs": self.total_pairs,
            "points": [{"pair": list(k), "point": enc(v)} for k, v in sorted(self.points.items())],
            "planes_distinct": self.planes_distinct,
            "all_incident": self.all_incident,
            "points_distinct": self.points_distinct,
            "span_dimension": self.span_dimension,
            "isotropic": self.isotropic,
            "lagrangian_spanning": self.lagrangian_spanning,
        }
