"""
EPW 指令处理器
- 六次型、秩亏、Θ_A 枚举、幂次检查、采样自检
"""

import random
from argparse import Namespace
from typing import TYPE_CHECKING

from core.algebra.fields import prime_field
from core.epw import (
    LagrangianSubspace,
    check_power,
    corank,
    epw_form,
    lagrangian_criterion,
    mutual_oracle,
    singular_samples,
    theta_enumerate,
)
from core.errors import DimensionError
from core.log import logger
from core.tens import construct_reye_family

from .result import EXIT_FAILED, EXIT_OK, CommandResult

if TYPE_CHECKING:
    from main import EnriquesToolkit


class EpwHandlers:
    """EPW 指令处理器"""

    def __init__(self, toolkit: "EnriquesToolkit"):
        self.toolkit = toolkit
        self.store = toolkit.store

    def _lagrangian(self, path) -> LagrangianSubspace:
        return LagrangianSubspace.from_ten(self.store.load_ten(path))

    def cmd_form(self, args: Namespace) -> CommandResult:
        """
        指令: epw form --in cfg.json [--out sextic.json]
        """
        result = epw_form(self._lagrangian(args.input), seed=self.toolkit.seed(args),
                          check_points=self.toolkit.chart_check_points)
        if args.out and not result.is_degenerate:
            self.store.save_form(args.out, result.sextic())
        return CommandResult(result.to_dict())

    def cmd_corank(self, args: Namespace) -> CommandResult:
        """
        指令: epw corank --in cfg.json --point "1,0,0,0,0,0"
        """
        a = self._lagrangian(args.input)
        try:
            point = tuple(a.field.coerce(int(x)) for x in args.point.split(","))
        except ValueError as e:
            raise DimensionError(f"point must be six comma-separated integers: {e}") from e
        if len(point) != 6:
            raise DimensionError("point length", expected=6, actual=len(point))
        k = corank(a, point)
        return CommandResult({
            "point": [a.field.scalar_to_json(x) for x in point],
            "corank": k,
            "criterion": lagrangian_criterion(a, point),
        })

    def cmd_theta(self, args: Namespace) -> CommandResult:
        """
        P(A)(F_p) 中的全部平面
        指令: epw theta [--in cfg.json | --p 5] --budget 3000000
        """
        if args.input:
            cfg = self.store.load_ten(args.input)
        else:
            cfg = construct_reye_family(prime_field(args.p), self.toolkit.seed(args))
        found = theta_enumerate(LagrangianSubspace.from_ten(cfg), self.toolkit.budget(args))
        missing = [i for i, p in enumerate(cfg.planes) if p.canonical_rows() not in found]
        f = cfg.field
        return CommandResult({
            "field": f.to_json(),
            "found": len(found),
            "planes": [[[f.scalar_to_json(x) for x in r] for r in rows] for rows in sorted(found)],
            "missing_generators": missing,
        }, EXIT_OK if not missing else EXIT_FAILED)

    def cmd_check_power(self, args: Namespace) -> CommandResult:
        """
        s = λ·base^exp
        指令: epw check-power --form sextic.json --base quadric.json --exp 3
        """
        s = self.store.load_form(args.form)
        base = self.store.load_form(args.base)
        if base.field != s.field:
            base = base.map_coefficients(lambda c: base.field.embed(c, s.field), s.field)
        holds = check_power(s, base, args.exp)
        return CommandResult({"exp": args.exp, "holds": holds}, EXIT_OK if holds else EXIT_FAILED)

    def cmd_check(self, args: Namespace) -> CommandResult:
        """
        互校验与平面奇点采样
        指令: epw check --in cfg.json
        """
        cfg = self.store.load_ten(args.input)
        seed = self.toolkit.seed(args)
        result = epw_form(LagrangianSubspace.from_ten(cfg), seed=seed, check_points=self.toolkit.chart_check_points)
        if result.is_degenerate:
            logger.warning("⚠️ A 的 EPW 六次型恒退化，跳过采样")
            return CommandResult({"epw": result.to_dict()}, EXIT_FAILED)
        oracle = mutual_oracle(result, random.Random(f"oracle:{seed}"), self.toolkit.oracle_samples, cfg.planes)
        singular = singular_samples(result, cfg.planes, random.Random(f"singular:{seed}"),
                                    self.toolkit.singular_per_plane)
        ok = oracle["mismatch"] == 0 and singular.passed
        return CommandResult({
            "epw": result.to_dict(),
            "oracle": oracle,
            "singular": singular.to_dict(),
        }, EXIT_OK if ok else EXIT_FAILED)
