"""
超曲面指令处理器
- 过平面 / 过交点的 d 次型、奇点扫描
"""

import random
from argparse import Namespace
from typing import TYPE_CHECKING

from core.algebra.fields import ext_field
from core.hypersurfaces import check_on_planes, singular_scan, through_planes, through_points
from core.log import logger
from core.tens import verify

from .result import CommandResult

if TYPE_CHECKING:
    from main import EnriquesToolkit


class CubicHandlers:
    """超曲面指令处理器"""

    def __init__(self, toolkit: "EnriquesToolkit"):
        self.toolkit = toolkit
        self.store = toolkit.store

    def cmd_through_planes(self, args: Namespace) -> CommandResult:
        """
        指令: cubic through-planes --in cfg.json -d 3 [--out form.json]

        --out 只在系统恰为一维时写出唯一的型
        """
        cfg = self.store.load_ten(args.input)
        sys = through_planes(cfg.planes, args.degree)
        rechecked = check_on_planes(sys, cfg.planes, random.Random(f"cubic:{self.toolkit.seed(args)}"))
        payload = {**sys.to_json(), "rechecked": rechecked}
        if sys.dimension == 1:
            form = sys.basis[0].normalize()[0]
            payload["form"] = str(form)
            if args.out:
                self.store.save_form(args.out, form)
        elif args.out:
            logger.warning(f"⚠️ 系统维数为 {sys.dimension}，不写出 {args.out}")
        return CommandResult(payload)

    def cmd_through_points(self, args: Namespace) -> CommandResult:
        """
        过两两交点的 d 次型
        指令: cubic through-points --in cfg.json -d 3
        """
        cfg = self.store.load_ten(args.input)
        report = verify(cfg)
        sys, rank = through_points(cfg.field, list(report.points.values()), args.degree)
        return CommandResult({
            "points": len(report.points),
            "d": args.degree,
            "dimension": sys.dimension,
            "condition_rank": rank,
        })

    def cmd_scan(self, args: Namespace) -> CommandResult:
        """
        奇点扫描（部分证书）
        指令: cubic scan --form f.json -K 2 --budget 10000000
        """
        seed = self.toolkit.seed(args)
        form = self.store.load_form(args.form)
        base = form.field

        def encode(k, pt):
            fld = base if k == 1 else ext_field(base.p, k, seed)
            return [fld.scalar_to_json(x) for x in pt]

        report = singular_scan(form, args.max_degree, self.toolkit.budget(args), seed)
        return CommandResult(report.to_dict(encode))
