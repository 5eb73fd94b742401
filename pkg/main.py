"""
Enriques 十平面计算工具包 - 命令行入口

子命令: ten / cubic / epw / lattice / coble / suite
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

# 导入核心模块
from core import ConfigManager, ToolkitError, logger, setup_logging
from database import ArtifactStore

# 导入指令处理器
from handlers import (
    EXIT_ERROR,
    CobleHandlers,
    CommandResult,
    CubicHandlers,
    EpwHandlers,
    LatticeHandlers,
    SuiteHandlers,
    TenHandlers,
)

PACKAGE_DIR = Path(__file__).parent
SCHEMA_FILE = PACKAGE_DIR / "_conf_schema.json"


def schema_defaults(schema_path: Path = SCHEMA_FILE) -> Dict[str, Dict[str, Any]]:
    """按分组读出 _conf_schema.json 中的默认值"""
    with open(schema_path, "r", encoding="utf-8") as f:
        schema = json.load(f)
    return {
        group: {key: item.get("default") for key, item in spec.get("items", {}).items()}
        for group, spec in schema.items()
    }


class EnriquesToolkit:
    """工具包主对象：持有设置、配置管理器、产物存储和各指令处理器"""

    def __init__(self, settings: Optional[Dict[str, Dict[str, Any]]] = None,
                 data_path: Optional[Path] = None):
        # ==================== 读取设置 ====================
        self.settings = schema_defaults()
        for group, values in (settings or {}).items():
            self.settings.setdefault(group, {}).update(values)
        self._load_settings()

        # ==================== 路径配置 ====================
        self.default_data_path = PACKAGE_DIR / "data"
        self.data_path = Path(data_path) if data_path is not None else PACKAGE_DIR / self.data_dir

        # ==================== 初始化核心系统 ====================
        self.config = ConfigManager(
            data_path=self.data_path,
            default_data_path=self.default_data_path,
        )
        self.store = ArtifactStore()

        # ==================== 初始化指令处理器 ====================
        self.handlers = {
            "ten": TenHandlers(self),
            "cubic": CubicHandlers(self),
            "epw": EpwHandlers(self),
            "lattice": LatticeHandlers(self),
            "coble": CobleHandlers(self),
            "suite": SuiteHandlers(self),
        }

    def _load_settings(self):
        """从分组设置读取运行参数"""
        run_settings = self.settings.get("run_settings", {})
        self.default_seed = int(run_settings.get("seed", 0))
        self.default_budget = int(run_settings.get("budget", 10_000_000))
        self.log_level = run_settings.get("log_level", "INFO")
        self.data_dir = run_settings.get("data_dir", "runtime")

        sampling = self.settings.get("sampling", {})
        self.chart_check_points = int(sampling.get("chart_check_points", 100))
        self.singular_per_plane = int(sampling.get("singular_samples_per_plane", 100))
        self.oracle_samples = int(sampling.get("oracle_samples", 1000))

        coble = self.settings.get("coble", {})
        self.prime_range = (int(coble.get("prime_min", 31)), int(coble.get("prime_max", 499)))
        self.extension_degree = int(coble.get("extension_degree", 2))

    def seed(self, args: argparse.Namespace) -> int:
        return args.seed if getattr(args, "seed", None) is not None else self.default_seed

    def budget(self, args: argparse.Namespace) -> int:
        return args.budget if getattr(args, "budget", None) is not None else self.default_budget

    def dispatch(self, args: argparse.Namespace) -> CommandResult:
        group, method = args.command
        return getattr(self.handlers[group], method)(args)


# ==================== 命令行 ====================

GLOBAL_DEFAULTS = {
    "seed": None,
    "budget": None,
    "json": "-",
    "verbose": False,
    "settings": None,
    "data_dir": None,
}


def _global_flags() -> argparse.ArgumentParser:
    """全局参数可以写在子命令前后任意位置"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="全局随机种子")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="点数预算")
    common.add_argument("--json", default=argparse.SUPPRESS, help="结果 JSON 输出路径，- 表示标准输出")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS, help="DEBUG 日志")
    common.add_argument("--settings", default=argparse.SUPPRESS, help="覆盖 _conf_schema 默认值的设置文件")
    common.add_argument("--data-dir", dest="data_dir", default=argparse.SUPPRESS, help="运行时数据目录")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = argparse.ArgumentParser(prog="enriques-tens", description="Enriques 曲面十平面计算工具包",
                                     parents=[common])
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(sub, name: str, command, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(command=command)
        return p

    # ten
    ten = groups.add_parser("ten", help="十平面构造与验证").add_subparsers(dest="action", required=True)
    p = leaf(ten, "construct", ("ten", "cmd_construct"), "按配方构造")
    p.add_argument("--recipe", choices=["3331", "morin13", "reye", "random"], required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--out")
    p = leaf(ten, "verify", ("ten", "cmd_verify"), "关联与迷向验证")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p = leaf(ten, "dualize", ("ten", "cmd_dualize"), "对偶")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p = leaf(ten, "tangent-rank", ("ten", "cmd_tangent_rank"), "切方程秩")
    p.add_argument("--in", dest="input", required=True)

    # cubic
    cubic = groups.add_parser("cubic", help="过平面 / 点的超曲面").add_subparsers(dest="action", required=True)
    p = leaf(cubic, "through-planes", ("cubic", "cmd_through_planes"), "过全部平面的 d 次型")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("-d", "--degree", type=int, default=3)
    p.add_argument("--out")
    p = leaf(cubic, "through-points", ("cubic", "cmd_through_points"), "过两两交点的 d 次型")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("-d", "--degree", type=int, default=3)
    p = leaf(cubic, "scan", ("cubic", "cmd_scan"), "奇点扫描")
    p.add_argument("--form", required=True)
    p.add_argument("-K", dest="max_degree", type=int, default=1)

    # epw
    epw = groups.add_parser("epw", help="EPW 六次型").add_subparsers(dest="action", required=True)
    p = leaf(epw, "form", ("epw", "cmd_form"), "六次型")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p = leaf(epw, "corank", ("epw", "cmd_corank"), "点的秩亏")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--point", required=True)
    p = leaf(epw, "theta", ("epw", "cmd_theta"), "Θ_A 枚举")
    p.add_argument("--in", dest="input")
    p.add_argument("--p", type=int, default=5)
    p = leaf(epw, "check-power", ("epw", "cmd_check_power"), "s = λ·base^exp")
    p.add_argument("--form", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--exp", type=int, required=True)
    p = leaf(epw, "check", ("epw", "cmd_check"), "互校验与奇点采样")
    p.add_argument("--in", dest="input", required=True)

    # lattice
    lattice = groups.add_parser("lattice", help="整数格").add_subparsers(dest="action", required=True)
    p = leaf(lattice, "gram", ("lattice", "cmd_gram"), "预设 Gram 矩阵")
    p.add_argument("--preset", choices=["M10", "M11", "BB", "EPW", "E10", "M0"], required=True)
    p.add_argument("--out")
    p = leaf(lattice, "smith", ("lattice", "cmd_smith"), "Smith 标准形")
    p.add_argument("--in", dest="input", required=True)
    leaf(lattice, "facts", ("lattice", "cmd_facts"), "格的全部论断")

    # coble
    coble = groups.add_parser("coble", help="Coble 十平面").add_subparsers(dest="action", required=True)
    p = leaf(coble, "build", ("coble", "cmd_build"), "由 Winger 结点构造")
    p.add_argument("--kind", choices=["septic", "decimic"], required=True)
    p.add_argument("--prime", type=int)
    p.add_argument("--out")

    # suite
    p = groups.add_parser("suite", parents=[common], help="验收套件")
    p.set_defaults(command=("suite", "cmd_run"))
    p.add_argument("--config", help="套件配置文件（默认使用运行时目录中的 suite.json）")
    p.add_argument("--blocks", help="逗号分隔的检查块")
    p.add_argument("--freeze", action="store_true", help="把观测值写入基线")
    p.add_argument("--no-runtime", dest="no_runtime", action="store_true", help="报告中省略运行时间")

    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    for name, default in GLOBAL_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, default)
    return args


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    setup_logging("DEBUG" if args.verbose else "INFO")

    try:
        settings = None
        if args.settings:
            with open(args.settings, "r", encoding="utf-8") as f:
                settings = json.load(f)
        toolkit = EnriquesToolkit(settings, Path(args.data_dir) if args.data_dir else None)
        if not args.verbose:
            setup_logging(toolkit.log_level)
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"❌ 设置文件读取失败: {e}")
        return EXIT_ERROR

    try:
        result = toolkit.dispatch(args)
        toolkit.store.write_json(args.json, result.payload)
    except ToolkitError as e:
        logger.error(f"❌ {e}")
        return EXIT_ERROR
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
