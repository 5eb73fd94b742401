"""
工具包异常体系

验证类失败（例如十平面不两两相交）只记录在报告标志里，不抛异常；
这里的异常只用于"无法继续计算"的情形。
"""

from typing import Any, Optional


class ToolkitError(Exception):
    """所有工具包异常的基类"""


class FieldError(ToolkitError):
    """域描述非法，或极小多项式搜索超出预算"""


class DimensionError(ToolkitError):
    """形状不匹配，或线性系统维数与预期不符"""

    def __init__(self, message: str, expected: Any = None, actual: Any = None):
        self.expected = expected
        self.actual = actual
        if expected is not None or actual is not None:
            message = f"{message} (expected={expected}, actual={actual})"
        super().__init__(message)


class InconsistentSystemError(ToolkitError):
    """右端项不在列空间内"""


class InterpolationError(ToolkitError):
    """插值系统奇异，或留出点校验失败"""


class SingularSampleError(InterpolationError):
    """样本点不够一般，系数系统降秩（换一组样本即可）"""


class DivisionError(ToolkitError):
    """多项式除法不整除"""

    def __init__(self, message: str, residual: Optional[Any] = None):
        self.residual = residual
        if residual is not None:
            message = f"{message}; residual term {residual}"
        super().__init__(message)


class ChartError(ToolkitError):
    """平面与坐标卡不横截"""

    def __init__(self, message: str, rank_defect: int = 0):
        self.rank_defect = rank_defect
        super().__init__(f"{message} (rank defect {rank_defect})")


class ConstructionError(ToolkitError):
    """构造搜索失败；fact 字段记录对应的论断"""

    def __init__(self, message: str, fact: str = ""):
        self.fact = fact
        super().__init__(f"{message} [{fact}]" if fact else message)


class BudgetExceededError(ToolkitError):
    """枚举规模超过点数预算"""

    def __init__(self, what: str, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what}: needs {needed} points, budget is {budget}")
