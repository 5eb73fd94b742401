"""
核心模块统一导出
"""

from .log import logger, setup_logging
from .errors import (
    ToolkitError,
    FieldError,
    DimensionError,
    InconsistentSystemError,
    InterpolationError,
    SingularSampleError,
    DivisionError,
    ChartError,
    ConstructionError,
    BudgetExceededError,
)
from .config_manager import ConfigManager, ConfigLoadError
from .algebra import RATIONALS, FieldSpec, ext_field, prime_field, field_from_json
from .algebra.polynomials import MultiPoly
from .grassmann import Plane
from .lattices import IntLattice, LatticeVector
from .tens import TenConfig, Provenance, IncidenceReport, verify
from .hypersurfaces import FormSystem, through_planes, through_points
from .epw import LagrangianSubspace, EpwResult, epw_form
from .plane_curves import MultPointSet, CobleData, winger_nodes
from .suite import CheckStatus, RunReport, SuiteConfig, run_suite

__all__ = [
    # 日志
    "logger",
    "setup_logging",

    # 异常
    "ToolkitError",
    "FieldError",
    "DimensionError",
    "InconsistentSystemError",
    "InterpolationError",
    "SingularSampleError",
    "DivisionError",
    "ChartError",
    "ConstructionError",
    "BudgetExceededError",

    # 配置
    "ConfigManager",
    "ConfigLoadError",

    # 精确代数
    "RATIONALS",
    "FieldSpec",
    "ext_field",
    "prime_field",
    "field_from_json",
    "MultiPoly",

    # 几何
    "Plane",
    "TenConfig",
    "Provenance",
    "IncidenceReport",
    "verify",
    "FormSystem",
    "through_planes",
    "through_points",
    "LagrangianSubspace",
    "EpwResult",
    "epw_form",
    "MultPointSet",
    "CobleData",
    "winger_nodes",

    # 格
    "IntLattice",
    "LatticeVector",

    # 验收套件
    "CheckStatus",
    "RunReport",
    "SuiteConfig",
    "run_suite",
]
