"""
十平面相关指令处理器
- 构造、验证、对偶、切方程秩
"""

from argparse import Namespace
from typing import TYPE_CHECKING

from core.algebra.fields import ext_field, prime_field
from core.constants import MORIN_DEFAULT_PRIME, THREE_CONIC_PRIME
from core.errors import DimensionError
from core.log import logger
from core.tens import (
    construct_3331,
    construct_morin13,
    construct_reye_family,
    dualize,
    random_ten,
    tangent_rank,
    verify,
)

from .result import EXIT_FAILED, EXIT_OK, CommandResult

if TYPE_CHECKING:
    from main import EnriquesToolkit


# 各配方的默认素数
DEFAULT_PRIMES = {
    "3331": THREE_CONIC_PRIME,
    "morin13": MORIN_DEFAULT_PRIME,
    "reye": 5,
    "random": 101,
}


class TenHandlers:
    """十平面相关指令处理器"""

    def __init__(self, toolkit: "EnriquesToolkit"):
        self.toolkit = toolkit
        self.store = toolkit.store

    def cmd_construct(self, args: Namespace) -> CommandResult:
        """
        按配方构造平面组
        指令: ten construct --recipe {3331|morin13|reye|random} [--p --k --seed]
        """
        seed = self.toolkit.seed(args)
        recipe = args.recipe
        p = args.p or DEFAULT_PRIMES[recipe]
        k = args.k or 1

        if recipe == "3331":
            if (p, k) != (THREE_CONIC_PRIME, 1):
                raise DimensionError("the 3-3-3-1 recipe is fixed over F_29", expected=(THREE_CONIC_PRIME, 1),
                                     actual=(p, k))
            cfg = construct_3331(seed)
        else:
            field = prime_field(p) if k == 1 else ext_field(p, k, seed)
            builders = {
                "morin13": construct_morin13,
                "reye": construct_reye_family,
                "random": random_ten,
            }
            cfg = builders[recipe](field, seed)

        logger.info(f"✅ 已构造 {recipe}: {len(cfg)} 个平面，域 {cfg.field!r}")
        if args.out:
            self.store.save_ten(args.out, cfg)
        return CommandResult(cfg.to_json())

    def cmd_verify(self, args: Namespace) -> CommandResult:
        """
        关联与迷向验证
        指令: ten verify --in cfg.json [--out report.json]
        """
        cfg = self.store.load_ten(args.input)
        report = verify(cfg)
        payload = report.to_dict(cfg.field)
        if args.out:
            self.store.write_json(args.out, payload)
        # 十平面要求两两相交且迷向；其它规模只看两两相交
        ok = report.all_incident and report.isotropic
        if not ok:
            logger.warning(f"⚠️ 验证未通过: {report.incident_pairs}/{report.total_pairs} 对相交，"
                           f"迷向 {report.isotropic}")
        return CommandResult(payload, EXIT_OK if ok else EXIT_FAILED)

    def cmd_dualize(self, args: Namespace) -> CommandResult:
        """
        对偶平面组
        指令: ten dualize --in cfg.json [--out dual.json]
        """
        dual = dualize(self.store.load_ten(args.input))
        if args.out:
            self.store.save_ten(args.out, dual)
        return CommandResult(dual.to_json())

    def cmd_tangent_rank(self, args: Namespace) -> CommandResult:
        """
        切方程组的秩
        指令: ten tangent-rank --in cfg.json
        """
        cfg = self.store.load_ten(args.input)
        rank, corank = tangent_rank(cfg)
        return CommandResult({"planes": len(cfg), "rank": rank, "corank": corank})
