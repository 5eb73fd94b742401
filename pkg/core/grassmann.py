"""
Gr(3,6)：平面、Plücker 坐标、楔积辛配对、坐标卡与关联判别

Plücker 三元组固定为字典序 e_{abc} (a<b<c)，所有序列化的 20 维向量都按此顺序。
平面按构造时的基保存，只在判等和序列化时做简化行阶梯规范化。
"""

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import linalg
from .algebra.fields import FieldSpec
from .errors import ChartError, DimensionError


# ==================== 组合表 ====================

TRIPLES: Tuple[Tuple[int, int, int], ...] = tuple(combinations(range(6), 3))
TRIPLE_INDEX: Dict[Tuple[int, int, int], int] = {t: i for i, t in enumerate(TRIPLES)}
QUADS: Tuple[Tuple[int, ...], ...] = tuple(combinations(range(6), 4))
QUAD_INDEX: Dict[Tuple[int, ...], int] = {q: i for i, q in enumerate(QUADS)}
PENCIL_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def permutation_sign(seq: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def _complement_table() -> Tuple[Tuple[int, int], ...]:
    table = []
    for t in TRIPLES:
        rest = tuple(x for x in range(6) if x not in t)
        table.append((TRIPLE_INDEX[rest], permutation_sign(t + rest)))
    return tuple(table)


# 每个三元组 I：(补三元组的下标, sign(I, I^c))
COMPLEMENT = _complement_table()


def _wedge_vector_table() -> Tuple[Tuple[Tuple[int, int, int], ...], ...]:
    """e_a ∧ e_{bcd} = sign · e_J：按 a 列出 (三元组下标, 四元组下标, 符号)"""
    table = []
    for a in range(6):
        entries = []
        for ti, t in enumerate(TRIPLES):
            if a in t:
                continue
            quad = tuple(sorted((a,) + t))
            sign = -1 if sum(1 for x in t if x < a) % 2 else 1
            entries.append((ti, QUAD_INDEX[quad], sign))
        table.append(tuple(entries))
    return tuple(table)


WEDGE_VECTOR = _wedge_vector_table()


def _wedge_pair_table() -> Tuple[Tuple[Tuple[int, int, int], ...], ...]:
    """v ∧ e_a ∧ e_b = Σ_c v_c · sign · e_{sorted(c,a,b)}：按 (a<b) 列出 (c, 三元组下标, 符号)"""
    table = []
    for a, b in combinations(range(6), 2):
        entries = []
        for c in range(6):
            if c in (a, b):
                continue
            entries.append((c, TRIPLE_INDEX[tuple(sorted((c, a, b)))], permutation_sign((c, a, b))))
        table.append(tuple(entries))
    return tuple(table)


PAIRS: Tuple[Tuple[int, int], ...] = tuple(combinations(range(6), 2))
WEDGE_PAIR = _wedge_pair_table()


# ==================== Plücker 与配对 ====================

def _det3(field: FieldSpec, a, b, c):
    m, s = field.mul, field.sub
    t1 = m(a[0], s(m(b[1], c[2]), m(b[2], c[1])))
    t2 = m(a[1], s(m(b[0], c[2]), m(b[2], c[0])))
    t3 = m(a[2], s(m(b[0], c[1]), m(b[1], c[0])))
    return field.add(s(t1, t2), t3)


def plucker_of_rows(field: FieldSpec, rows: Sequence[Sequence]) -> Tuple:
    """三行的楔积：每个三元组 (a,b,c) 取对应列的 3×3 子式"""
    r0, r1, r2 = rows
    out = []
    for a, b, c in TRIPLES:
        out.append(_det3(field, (r0[a], r0[b], r0[c]), (r1[a], r1[b], r1[c]), (r2[a], r2[b], r2[c])))
    return tuple(out)


def pairing(field: FieldSpec, u: Sequence, v: Sequence):
    """u∧v 中 e_{012345} 的系数"""
    acc = field.zero
    for i, (j, sign) in enumerate(COMPLEMENT):
        if u[i] and v[j]:
            t = field.mul(u[i], v[j])
            acc = field.add(acc, t) if sign > 0 else field.sub(acc, t)
    return acc


def wedge_with_vector(field: FieldSpec, u: Sequence, omega: Sequence) -> List:
    """u ∧ ω ∈ ⋀⁴（15 维）"""
    out = [field.zero] * len(QUADS)
    for a in range(6):
        if not u[a]:
            continue
        for ti, qi, sign in WEDGE_VECTOR[a]:
            if omega[ti]:
                t = field.mul(u[a], omega[ti])
                out[qi] = field.add(out[qi], t) if sign > 0 else field.sub(out[qi], t)
    return out


def wedge_matrix(field: FieldSpec, omega: Sequence) -> List[List]:
    """u ↦ u∧ω 的 15×6 矩阵（列对应 u 的坐标）"""
    m = [[field.zero] * 6 for _ in QUADS]
    for a in range(6):
        for ti, qi, sign in WEDGE_VECTOR[a]:
            w = omega[ti]
            if w:
                m[qi][a] = w if sign > 0 else field.neg(w)
    return m


def wedge_pair_vectors(field: FieldSpec, v: Sequence, skip: Optional[int] = None) -> List[List]:
    """v∧e_a∧e_b (a<b) 的 20 维坐标；skip 给出时略去含该下标的 (a,b)"""
    out = []
    for (a, b), entries in zip(PAIRS, WEDGE_PAIR):
        if skip is not None and skip in (a, b):
            continue
        vec = [field.zero] * 20
        for c, ti, sign in entries:
            if v[c]:
                vec[ti] = v[c] if sign > 0 else field.neg(v[c])
        out.append(vec)
    return out


# ==================== 平面 ====================

@dataclass(frozen=True)
class Plane:
    """
    P^5 中的平面：3×6 满秩矩阵的行空间

    plucker 在构造时由行计算，秩不足（Plücker 向量为零）时报错。
    """
    field: FieldSpec
    rows: Tuple[Tuple, ...]
    plucker: Tuple = field(default=(), compare=False)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != 3 or any(len(r) != 6 for r in rows):
            raise DimensionError("a plane needs a 3x6 matrix", expected=(3, 6),
                                 actual=(len(rows), len(rows[0]) if rows else 0))
        object.__setattr__(self, "rows", rows)
        pl = plucker_of_rows(self.field, rows)
        if not any(pl):
            raise DimensionError("plane rows are not independent", expected=3,
                                 actual=linalg.rank(self.field, rows))
        object.__setattr__(self, "plucker", pl)

    @classmethod
    def from_ints(cls, field: FieldSpec, rows: Sequence[Sequence]) -> "Plane":
        return cls(field, tuple(tuple(field.coerce(x) for x in r) for r in rows))

    @classmethod
    def coordinate(cls, field: FieldSpec, indices: Sequence[int]) -> "Plane":
        """坐标平面 ⟨e_a, e_b, e_c⟩"""
        return cls(field, tuple(tuple(field.one if j == i else field.zero for j in range(6)) for i in indices))

    def canonical_rows(self) -> Tuple[Tuple, ...]:
        return tuple(map(tuple, linalg.row_basis(self.field, self.rows)))

    def same_as(self, other: "Plane") -> bool:
        return self.canonical_rows() == other.canonical_rows()

    def point(self, coeffs: Sequence) -> Tuple:
        return tuple(linalg.vec_mat(self.field, coeffs, self.rows))

    def random_point(self, rng: random.Random) -> Tuple:
        while True:
            s = [self.field.random_element(rng) for _ in range(3)]
            if any(s):
                return self.point(s)

    def contains(self, v: Sequence) -> bool:
        return linalg.in_row_space(self.field, self.rows, v)

    def apply_transform(self, g: Sequence[Sequence]) -> "Plane":
        """坐标变换 v ↦ g·v（行向量右乘 g^T）"""
        return Plane(self.field, tuple(map(tuple, linalg.matmul(self.field, self.rows, linalg.transpose(g)))))

    def to_json(self) -> dict:
        return {
            "rows": [[self.field.scalar_to_json(x) for x in r] for r in self.rows],
            "field": self.field.to_json(),
        }

    @classmethod
    def from_json(cls, field: FieldSpec, obj: dict) -> "Plane":
        return cls(field, tuple(tuple(field.scalar_from_json(x) for x in r) for r in obj["rows"]))


def plucker(p: Plane) -> Tuple:
    return p.plucker


def meet(p: Plane, q: Plane) -> int:
    """交的射影维数：−1 空，0 点，1 直线，2 重合"""
    return 5 - linalg.rank(p.field, list(p.rows) + list(q.rows))


def intersection_point(p: Plane, q: Plane) -> Optional[Tuple]:
    """交为一点时返回规范化的点，否则 None"""
    f = p.field
    stacked = list(p.rows) + list(q.rows)
    ker = linalg.left_kernel(f, stacked)
    if len(ker) != 1:
        return None
    y = ker[0]
    return f.normalize(linalg.vec_mat(f, y[:3], p.rows))


def random_plane(field: FieldSpec, rng: random.Random) -> Plane:
    while True:
        rows = [[field.random_element(rng) for _ in range(6)] for _ in range(3)]
        if linalg.rank(field, rows) == 3:
            return Plane(field, tuple(map(tuple, rows)))


def random_invertible(field: FieldSpec, n: int, rng: random.Random) -> List[List]:
    while True:
        g = [[field.random_element(rng) for _ in range(n)] for _ in range(n)]
        if linalg.det(field, g):
            return g


# ==================== 可分解性 ====================

def is_decomposable(field: FieldSpec, omega: Sequence) -> Optional[Plane]:
    """
    ω 可分解时返回平面 {u : u∧ω = 0}，否则 None

    核维数只可能是 0、1、3；为 3 时 ω 与该平面的 Plücker 向量成比例。
    """
    if not any(omega):
        raise DimensionError("omega must be nonzero")
    ker = linalg.kernel(field, wedge_matrix(field, omega), 6)
    if len(ker) != 3:
        return None
    return Plane(field, tuple(map(tuple, ker)))


# ==================== 坐标卡 ====================

@dataclass(frozen=True)
class ChartMatrix:
    """
    平面 = (I_3 / A) 的列空间；pivots 是取 I_3 的三个坐标

    A 的第 j 列给出第 j 个基向量在非主元坐标上的分量。
    """
    pivots: Tuple[int, int, int]
    others: Tuple[int, int, int]
    matrix: Tuple[Tuple, ...]

    def to_plane(self, field: FieldSpec) -> Plane:
        rows = []
        for j in range(3):
            v = [field.zero] * 6
            v[self.pivots[j]] = field.one
            for i, c in enumerate(self.others):
                v[c] = self.matrix[i][j]
            rows.append(tuple(v))
        return Plane(field, tuple(rows))


ALL_CHARTS: Tuple[Tuple[int, int, int], ...] = TRIPLES


def chart_matrix(p: Plane, pivots: Sequence[int] = (0, 1, 2)) -> ChartMatrix:
    """
    Raises:
        ChartError: 平面与该坐标卡不横截（主元列子式奇异）
    """
    f = p.field
    pivots = tuple(pivots)
    others = tuple(c for c in range(6) if c not in pivots)
    mp = [[r[c] for c in pivots] for r in p.rows]
    mn = [[r[c] for c in others] for r in p.rows]
    r = linalg.rank(f, mp)
    if r < 3:
        raise ChartError(f"plane is not transverse to chart {pivots}", rank_defect=3 - r)
    rowform = linalg.matmul(f, linalg.inverse(f, mp), mn)  # 行形式 (I | B)
    return ChartMatrix(pivots, others, tuple(map(tuple, linalg.transpose(rowform))))


def chart_incident(field: FieldSpec, a: ChartMatrix, b: ChartMatrix) -> bool:
    """同一坐标卡中：相交 ⇔ det(A_i − A_j) = 0"""
    return not linalg.det(field, linalg.mat_sub(field, a.matrix, b.matrix))


# ==================== Reye 束 ====================

def _quad_value(field: FieldSpec, m: Sequence[Sequence], v: Sequence, w: Sequence):
    return field.dot(v, linalg.mat_vec(field, m, w))


def bitangent_pencil(field: FieldSpec, web: Sequence[Sequence[Sequence]], v: Sequence, w: Sequence) -> Tuple:
    """
    2×4 矩阵 [(vA_iv)_i ; (wA_iw)_i] 的六个 2×2 子式，顺序 (01,02,03,12,13,23)

    Raises:
        DimensionError: 矩阵秩小于 2
    """
    if len(web) != 4:
        raise DimensionError("a web has four quadrics", expected=4, actual=len(web))
    top = [_quad_value(field, a, v, v) for a in web]
    bottom = [_quad_value(field, a, w, w) for a in web]
    r = linalg.rank(field, [top, bottom])
    if r < 2:
        raise DimensionError("pencil matrix has rank below 2", expected=2, actual=r)
    return tuple(field.sub(field.mul(top[i], bottom[j]), field.mul(top[j], bottom[i])) for i, j in PENCIL_PAIRS)


def reye_line(field: FieldSpec, web: Sequence[Sequence[Sequence]], v: Sequence, w: Sequence) -> bool:
    """直线 ⟨v,w⟩ 落在网中一束二次曲面上 ⇔ [(vA_iv); (vA_iw); (wA_iw)] 秩 ≤ 2"""
    rows = [
        [_quad_value(field, a, v, v) for a in web],
        [_quad_value(field, a, v, w) for a in web],
        [_quad_value(field, a, w, w) for a in web],
    ]
    return linalg.rank(field, rows) <= 2
