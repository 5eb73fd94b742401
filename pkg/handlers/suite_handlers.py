"""
验收套件指令处理器
"""

from argparse import Namespace
from typing import TYPE_CHECKING

from core.log import logger
from core.suite import SuiteConfig, load_suite_config, run_suite

from .result import EXIT_FAILED, EXIT_OK, CommandResult

if TYPE_CHECKING:
    from main import EnriquesToolkit


class SuiteHandlers:
    """验收套件指令处理器"""

    def __init__(self, toolkit: "EnriquesToolkit"):
        self.toolkit = toolkit
        self.config = toolkit.config
        self.store = toolkit.store

    def _suite_config(self, args: Namespace):
        if args.config:
            config, digests = load_suite_config(args.config)
        else:
            config = self.config.suite
            path = self.config.path_of("suite")
            digests = self.store.digests([path])
            digests.update(self.store.digests(config.imports))
        # 命令行参数覆盖配置文件
        if args.seed is not None:
            config.seed = args.seed
        if args.budget is not None:
            config.budget = args.budget
        if args.blocks:
            config = SuiteConfig.from_dict({**config.to_dict(), "blocks": args.blocks.split(",")})
        return config, digests

    def cmd_run(self, args: Namespace) -> CommandResult:
        """
        执行全部检查
        指令: suite [--config suite.json] [--blocks lattice,algebra] [--freeze] [--no-runtime]
        """
        config, digests = self._suite_config(args)
        baseline = self.config.baseline
        report = run_suite(config, baseline, digests)

        if args.freeze:
            if not self.config.freeze(report.frozen):
                logger.error("❌ 基线写入失败")
        elif any(baseline.get(k) != v for k, v in report.frozen.items()):
            logger.info(f"🔍 观测值与基线不同或未冻结: {sorted(report.frozen)}（使用 --freeze 写入）")

        return CommandResult(report.to_dict(include_runtime=not args.no_runtime),
                             EXIT_OK if report.passed else EXIT_FAILED)
