"""
整数矩阵的 Smith 标准形与行列式

底层用 sympy 的 DomainMatrix(ZZ)：smith_normal_decomp 给出 D = L·M·R，
这里再按整数乘法复核一遍变换，并检查 L、R 的行列式为 ±1。
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_decomp

from ..errors import DimensionError

IntMatrix = List[List[int]]


def int_matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """整数矩阵行列式（无分数消元）"""
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise DimensionError("det needs a square matrix")
    return int(DM([[int(x) for x in r] for r in rows], ZZ).det())


def _to_ints(dm) -> IntMatrix:
    return [[int(x) for x in row] for row in dm.to_Matrix().tolist()]


@dataclass(frozen=True)
class SmithForm:
    """
    Smith 标准形

    diagonal: D 的对角元（含 0），d_1 | d_2 | ...
    left/right: 幺模变换，满足 left · M · right = D
    """
    diagonal: Tuple[int, ...]
    left: Tuple[Tuple[int, ...], ...]
    right: Tuple[Tuple[int, ...], ...]

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return tuple(d for d in self.diagonal if d)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def cokernel(self) -> Tuple[int, ...]:
        """余核的非平凡循环因子（不含 1；0 表示自由部分 Z）"""
        return tuple(d for d in self.diagonal if d != 1)

    @property
    def cokernel_order(self) -> int:
        """有限余核的阶（有自由部分时为 0）"""
        order = 1
        for d in self.diagonal:
            order *= d
        return order

    def describe(self) -> str:
        parts = []
        for d in self.cokernel:
            parts.append("Z" if d == 0 else f"Z/{d}")
        return " + ".join(parts) if parts else "0"


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """
    计算 Smith 标准形并复核变换

    Raises:
        DimensionError: 变换复核失败（不应发生）
    """
    m = [[int(x) for x in row] for row in matrix]
    nrows, ncols = len(m), len(m[0]) if m else 0
    d, s, t = smith_normal_decomp(DM(m, ZZ))
    dmat, left, right = _to_ints(d), _to_ints(s), _to_ints(t)

    # 对角元取正（翻转 L 的对应行，保持幺模）
    for i in range(min(nrows, ncols)):
        if dmat[i][i] < 0:
            dmat[i][i] = -dmat[i][i]
            left[i] = [-x for x in left[i]]

    if int_matmul(int_matmul(left, m), right) != dmat:
        raise DimensionError("Smith transform check failed: L*M*R != D")
    if abs(integer_det(left)) != 1 or abs(integer_det(right)) != 1:
        raise DimensionError("Smith transforms are not unimodular")

    diagonal = tuple(dmat[i][i] for i in range(min(nrows, ncols)))
    nonzero = [x for x in diagonal if x]
    if any(b % a for a, b in zip(nonzero, nonzero[1:])):
        raise DimensionError(f"diagonal {diagonal} violates the divisibility chain")
    return SmithForm(diagonal, tuple(map(tuple, left)), tuple(map(tuple, right)))
