"""
统一日志对象

所有模块通过 ``from ..log import logger`` 获取同一个 logger，
CLI 入口负责设置级别和输出位置（stderr，保证 stdout 上的 JSON 干净）。
"""

import logging
import sys

LOGGER_NAME = "enriques_tens"

logger = logging.getLogger(LOGGER_NAME)


def setup_logging(level: str = "INFO") -> logging.Logger:
    """配置日志输出（重复调用只会替换级别，不会重复添加 handler）"""
    logger.setLevel(getattr(logging, str(level).upper(), logging.INFO))
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(asctime)s [%(levelname)s] %(message)s", "%H:%M:%S"))
        logger.addHandler(handler)
    logger.propagate = False
    return logger
