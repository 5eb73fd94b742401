"""
指令执行结果
"""

from dataclasses import dataclass, field
from typing import Any, Dict

# 退出码
EXIT_OK = 0
EXIT_FAILED = 1      # 验证或套件失败
EXIT_ERROR = 2       # 无法继续计算（ToolkitError）


@dataclass
class CommandResult:
    """payload 写到 --json；exit_code 交给进程"""
    payload: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = EXIT_OK
