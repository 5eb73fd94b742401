"""
Coble 十平面指令处理器
"""

from argparse import Namespace
from typing import TYPE_CHECKING

from core.plane_curves import coble_data, coble_ten, winger_nodes
from core.tens import verify

from .result import EXIT_FAILED, EXIT_OK, CommandResult

if TYPE_CHECKING:
    from main import EnriquesToolkit


class CobleHandlers:
    """Coble 十平面指令处理器"""

    def __init__(self, toolkit: "EnriquesToolkit"):
        self.toolkit = toolkit
        self.store = toolkit.store

    def cmd_build(self, args: Namespace) -> CommandResult:
        """
        由 Winger 结点构造七次 / 十次 Coble 十平面
        指令: coble build --kind {septic|decimic} [--prime p] [--out cfg.json]

        未给素数时先查基线中冻结的素数，再按配置区间扫描
        """
        prime = args.prime or self.toolkit.config.frozen("winger_prime")
        prime, nodes = winger_nodes(prime, self.toolkit.extension_degree, self.toolkit.seed(args),
                                    prime_range=self.toolkit.prime_range)
        cfg = coble_ten(coble_data(nodes, args.kind), prime)
        report = verify(cfg)
        if args.out:
            self.store.save_ten(args.out, cfg)
        payload = {
            **cfg.to_json(),
            "nodes": nodes.to_json(),
            "lagrangian_spanning": report.lagrangian_spanning,
        }
        return CommandResult(payload, EXIT_OK if report.lagrangian_spanning else EXIT_FAILED)
