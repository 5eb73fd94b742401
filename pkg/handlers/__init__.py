"""
指令处理器模块
将所有Handler类导出，供main.py注册使用
"""

from .result import CommandResult, EXIT_OK, EXIT_FAILED, EXIT_ERROR
from .ten_handlers import TenHandlers
from .cubic_handlers import CubicHandlers
from .epw_handlers import EpwHandlers
from .lattice_handlers import LatticeHandlers
from .coble_handlers import CobleHandlers
from .suite_handlers import SuiteHandlers

__all__ = [
    # 结果
    "CommandResult",
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_ERROR",

    # 处理器
    "TenHandlers",
    "CubicHandlers",
    "EpwHandlers",
    "LatticeHandlers",
    "CobleHandlers",
    "SuiteHandlers",
]
