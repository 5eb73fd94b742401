"""
射影空间 P^n(F_q) 的点：规范化与枚举

规范代表元：第一个非零坐标为 1。
"""

from itertools import product
from typing import Iterator, Tuple

from .fields import FieldSpec


def projective_size(q: int, n: int) -> int:
    """|P^n(F_q)| = (q^{n+1} - 1) / (q - 1)"""
    return (q ** (n + 1) - 1) // (q - 1)


def projective_points(field: FieldSpec, n: int) -> Iterator[Tuple]:
    """按规范顺序枚举 P^n(F_q) 的全部点（坐标个数 n+1）"""
    elems = list(field.elements())
    for lead in range(n + 1):
        head = (field.zero,) * lead + (field.one,)
        for tail in product(elems, repeat=n - lead):
            yield head + tail


def is_zero_vector(vec) -> bool:
    return not any(vec)
