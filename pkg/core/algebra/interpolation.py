"""
齐次型插值

先用给定样本解系数（分次字典序单项式基），再在留出点上复核。
"""

import random
from typing import Callable, List, Sequence, Tuple

from ..constants import INTERPOLATION_ATTEMPTS, INTERPOLATION_HOLDOUT
from ..errors import InterpolationError, SingularSampleError
from ..log import logger
from .fields import FieldSpec
from .linalg import echelon
from .polynomials import MultiPoly, monomial_values, monomials

Sample = Tuple[Sequence, object]


def sample_count(n: int, d: int) -> int:
    """确定 n 元 d 次型所需的样本数 C(n-1+d, d)"""
    return len(monomials(n, d))


def random_points(field: FieldSpec, n: int, count: int, rng: random.Random) -> List[Tuple]:
    return [tuple(field.random_element(rng) for _ in range(n)) for _ in range(count)]


def interpolate(field: FieldSpec, n: int, d: int, samples: Sequence[Sample],
                holdout: Sequence[Sample]) -> MultiPoly:
    """
    由 (点, 值) 样本恢复唯一的 n 元 d 次齐次型，并在 holdout 上复核（至少一个留出点）

    Raises:
        SingularSampleError: 样本点不够一般，系统降秩
        InterpolationError: 样本不足，没有留出点，样本不来自 d 次型，或留出点不符
    """
    exps = monomials(n, d)
    need = len(exps)
    if len(samples) < need:
        raise InterpolationError(f"need {need} samples for degree {d} in {n} variables, got {len(samples)}")
    if not holdout:
        raise InterpolationError("at least one held-out sample is required")
    aug = [monomial_values(field, exps, pt) + [val] for pt, val in samples]
    # 只做前向消元，再回代
    m, pivots = echelon(field, aug, reduced=False)
    if need in pivots:
        raise InterpolationError("samples are not values of a single degree-%d form" % d)
    if len(pivots) < need:
        raise SingularSampleError(f"singular interpolation system: rank {len(pivots)} < {need}")
    coeffs = [field.zero] * need
    for i in range(need - 1, -1, -1):
        row = m[i]
        acc = row[need]
        for j in range(i + 1, need):
            if row[j] and coeffs[j]:
                acc = field.sub(acc, field.mul(row[j], coeffs[j]))
        coeffs[i] = acc
    poly = MultiPoly.from_vector(field, n, d, coeffs)
    for pt, val in holdout:
        if poly.evaluate(pt) != val:
            raise InterpolationError(f"held-out mismatch at {tuple(pt)}")
    return poly


def interpolate_function(field: FieldSpec, n: int, d: int, fn: Callable[[Sequence], object],
                         rng: random.Random, holdout: int = INTERPOLATION_HOLDOUT,
                         sampler: Callable[[random.Random], Tuple] = None,
                         attempts: int = INTERPOLATION_ATTEMPTS) -> MultiPoly:
    """
    对黑盒函数 fn 采样插值：C(n-1+d, d) 个样本求解，再用 holdout 个新点复核

    sampler 可替换默认的均匀随机点（例如限制在某个仿射坐标卡上）。
    样本系统降秩时重新抽一组样本，最多 attempts 次。
    """
    if field.is_finite and field.order <= d:
        raise InterpolationError(f"field of order {field.order} is too small for degree {d}")
    if holdout < 1:
        raise InterpolationError("at least one held-out sample is required")
    draw = sampler or (lambda r: tuple(field.random_element(r) for _ in range(n)))
    need = sample_count(n, d)
    for attempt in range(1, attempts + 1):
        samples = [(pt, fn(pt)) for pt in (draw(rng) for _ in range(need))]
        checks = [(pt, fn(pt)) for pt in (draw(rng) for _ in range(holdout))]
        try:
            poly = interpolate(field, n, d, samples, checks)
        except SingularSampleError as e:
            if attempt == attempts:
                raise
            logger.debug(f"🔍 样本降秩（{e}），重新抽样 {attempt}/{attempts}")
            continue
        logger.debug(f"🧮 插值完成: n={n}, d={d}, 样本 {need}, 留出 {holdout}")
        return poly
