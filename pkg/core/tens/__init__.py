"""
平面组模块
"""

from .models import TenConfig, Provenance, IncidenceReport
from .incidence import verify, tangent_rank, choose_chart, dualize, annihilator
from .constructions import (
    base_plane,
    three_conic_data,
    construct_3331,
    construct_morin13,
    morin_sanity,
    construct_reye_family,
    random_ten,
    load_ten,
    MATCHING_COUNT,
)

__all__ = [
    # 数据模型
    "TenConfig",
    "Provenance",
    "IncidenceReport",

    # 验证与对偶
    "verify",
    "tangent_rank",
    "choose_chart",
    "dualize",
    "annihilator",

    # 构造
    "base_plane",
    "three_conic_data",
    "construct_3331",
    "construct_morin13",
    "morin_sanity",
    "construct_reye_family",
    "random_ten",
    "load_ten",
    "MATCHING_COUNT",
]
