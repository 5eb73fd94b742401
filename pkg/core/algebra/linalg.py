"""
精确稠密线性代数

消元按列顺序选第一个非零主元，结果完全确定，报告可逐字节复现。
底层函数直接操作 list-of-lists（内部模块使用），ExactMatrix 是对外的不可变包装。
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..errors import DimensionError, InconsistentSystemError
from .fields import FieldSpec

Matrix = List[List]


# ==================== 基础构造 ====================

def identity(field: FieldSpec, n: int) -> Matrix:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def zeros(field: FieldSpec, nrows: int, ncols: int) -> Matrix:
    return [[field.zero] * ncols for _ in range(nrows)]


def transpose(rows: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*rows)]


def matmul(field: FieldSpec, a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionError("matmul shape mismatch", expected=len(a[0]), actual=len(b))
    bt = transpose(b)
    return [[field.dot(row, col) for col in bt] for row in a]


def mat_vec(field: FieldSpec, m: Sequence[Sequence], v: Sequence) -> List:
    return [field.dot(row, v) for row in m]


def vec_mat(field: FieldSpec, v: Sequence, m: Sequence[Sequence]) -> List:
    """行向量乘矩阵：Σ v_i · m[i]"""
    if not m:
        return []
    out = [field.zero] * len(m[0])
    for c, row in zip(v, m):
        if c:
            field.row_axpy(out, field.neg(c), row)
    return out


def mat_sub(field: FieldSpec, a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return [[field.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


# ==================== 消元 ====================

def echelon(field: FieldSpec, rows: Sequence[Sequence], reduced: bool = True) -> Tuple[Matrix, List[int]]:
    """
    Gauss(-Jordan) 消元

    Args:
        reduced: True 得到简化行阶梯形（主元为 1，主元列其余为 0）；
                 False 只消去主元下方（求秩用）

    Returns:
        (消元后的矩阵, 主元列列表)
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        field.scale_row(m[r], field.inv(m[r][c]), c)
        pivot_row = m[r]
        start = 0 if reduced else r + 1
        for i in range(start, nrows):
            if i != r and m[i][c]:
                field.row_axpy(m[i], m[i][c], pivot_row, c)
        pivots.append(c)
        r += 1
    return m, pivots


def rank(field: FieldSpec, rows: Sequence[Sequence]) -> int:
    return len(echelon(field, rows, reduced=False)[1])


def row_basis(field: FieldSpec, rows: Sequence[Sequence]) -> Matrix:
    """行空间的简化阶梯基（可作规范形比较）"""
    m, pivots = echelon(field, rows)
    return m[: len(pivots)]


def kernel(field: FieldSpec, rows: Sequence[Sequence], ncols: int = None) -> Matrix:
    """右零空间的一组基（每个基向量作为一行返回）"""
    if ncols is None:
        if not rows:
            raise DimensionError("kernel of an empty matrix needs ncols")
        ncols = len(rows[0])
    if not rows:
        return identity(field, ncols)
    m, pivots = echelon(field, rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for i, c in enumerate(pivots):
            if m[i][f]:
                v[c] = field.neg(m[i][f])
        basis.append(v)
    return basis


def left_kernel(field: FieldSpec, rows: Sequence[Sequence]) -> Matrix:
    """满足 y·M = 0 的 y 组成的基"""
    return kernel(field, transpose(rows), len(rows))


def solve(field: FieldSpec, rows: Sequence[Sequence], rhs: Sequence[Sequence]) -> Matrix:
    """
    求 M X = B 的一个特解（自由变量取 0）

    Args:
        rows: M（r × n）
        rhs: B（r × s）

    Raises:
        InconsistentSystemError: B 的某一列不在 M 的列空间中
    """
    if len(rows) != len(rhs):
        raise DimensionError("solve row count mismatch", expected=len(rows), actual=len(rhs))
    if not rows:
        return []
    ncols = len(rows[0])
    nrhs = len(rhs[0]) if rhs else 0
    aug = [list(r) + list(b) for r, b in zip(rows, rhs)]
    m, pivots = echelon(field, aug)
    for i, c in enumerate(pivots):
        if c >= ncols:
            raise InconsistentSystemError(f"right-hand side column {c - ncols} is outside the column space")
    x = zeros(field, ncols, nrhs)
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols:]
    return x


def solve_vector(field: FieldSpec, rows: Sequence[Sequence], b: Sequence) -> List:
    return [r[0] for r in solve(field, rows, [[v] for v in b])]


def in_row_space(field: FieldSpec, rows: Sequence[Sequence], v: Sequence) -> bool:
    return rank(field, list(rows) + [list(v)]) == rank(field, rows)


def det(field: FieldSpec, rows: Sequence[Sequence]):
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("det needs a square matrix")
    m = [list(r) for r in rows]
    result = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = field.neg(result)
        pv = m[c][c]
        result = field.mul(result, pv)
        inv = field.inv(pv)
        for i in range(c + 1, n):
            if m[i][c]:
                field.row_axpy(m[i], field.mul(m[i][c], inv), m[c], c)
    return result


def inverse(field: FieldSpec, rows: Sequence[Sequence]) -> Matrix:
    n = len(rows)
    aug = [list(r) + e for r, e in zip(rows, identity(field, n))]
    m, pivots = echelon(field, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise DimensionError("matrix is singular", expected=n, actual=len([c for c in pivots if c < n]))
    return [row[n:] for row in m]


def minor(rows: Sequence[Sequence], i: int, j: int) -> Matrix:
    return [list(r[:j]) + list(r[j + 1:]) for k, r in enumerate(rows) if k != i]


def adjugate(field: FieldSpec, rows: Sequence[Sequence]) -> Matrix:
    """伴随矩阵：满足 m·adj(m) = det(m)·I（奇异矩阵走余子式展开）"""
    n = len(rows)
    if n == 1:
        return [[field.one]]
    d = det(field, rows)
    if d:
        return [[field.mul(d, x) for x in row] for row in inverse(field, rows)]
    adj = zeros(field, n, n)
    for i in range(n):
        for j in range(n):
            c = det(field, minor(rows, i, j))
            adj[j][i] = c if (i + j) % 2 == 0 else field.neg(c)
    return adj


# ==================== 不可变包装 ====================

@dataclass(frozen=True)
class ExactMatrix:
    """
    域上的精确矩阵

    rows 为行主序的元组；所有元素属于同一个 field。
    """
    field: FieldSpec
    rows: Tuple[Tuple, ...]
    ncols: int

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], ncols: int = None) -> "ExactMatrix":
        """从 int / Fraction 行构造（扩域中 int 视为常数）"""
        rows = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged matrix rows", expected=ncols)
        return cls(field, rows, ncols)

    @classmethod
    def wrap(cls, field: FieldSpec, rows: Sequence[Sequence], ncols: int = None) -> "ExactMatrix":
        """直接包装已经是域元素的行（不做转换）"""
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(field, rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def to_lists(self) -> Matrix:
        return [list(r) for r in self.rows]

    def rank(self) -> int:
        return rank(self.field, self.rows)

    def kernel(self) -> "ExactMatrix":
        """列向量组成右零空间的基（ncols × dim）"""
        basis = kernel(self.field, self.rows, self.ncols)
        return ExactMatrix.wrap(self.field, transpose(basis) if basis else [[] for _ in range(self.ncols)],
                                len(basis))

    def solve(self, rhs: "ExactMatrix") -> "ExactMatrix":
        x = solve(self.field, self.rows, rhs.rows)
        return ExactMatrix.wrap(self.field, x, rhs.ncols)

    def det(self):
        return det(self.field, self.rows)

    def adjugate(self) -> "ExactMatrix":
        return ExactMatrix.wrap(self.field, adjugate(self.field, self.rows))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.wrap(self.field, transpose(self.rows) if self.rows else [], self.nrows)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix.wrap(self.field, matmul(self.field, self.rows, other.rows), other.ncols)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "rows": [[self.field.scalar_to_json(x) for x in r] for r in self.rows],
        }
