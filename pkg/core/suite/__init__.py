"""
验收套件
"""

from .models import CheckStatus, CheckRecord, SuiteConfig, RunReport, BLOCKS
from .runner import SuiteRunner, run_suite, load_suite_config, file_digest, RECIPES

__all__ = [
    # 数据模型
    "CheckStatus",
    "CheckRecord",
    "SuiteConfig",
    "RunReport",
    "BLOCKS",

    # 执行
    "SuiteRunner",
    "run_suite",
    "load_suite_config",
    "file_digest",
    "RECIPES",
]
