"""
二次曲线与二次曲面的小工具

二次型统一用对称矩阵 S 表示（q(x) = xᵀSx），因此要求特征不为 2。
"""

import random
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..algebra import linalg
from ..algebra.fields import FieldSpec
from ..algebra.polynomials import MultiPoly, monomial_values, monomials
from ..algebra.projective import projective_points
from ..errors import FieldError

Matrix = List[List]


def _half(field: FieldSpec):
    if field.is_finite and field.p == 2:
        raise FieldError("quadratic forms need characteristic != 2")
    return field.inv(field.from_int(2))


def symmetric_matrix(poly: MultiPoly) -> Matrix:
    """二次型 → 对称矩阵"""
    f, n = poly.field, poly.n
    half = _half(f)
    s = [[f.zero] * n for _ in range(n)]
    for exp, c in poly.terms.items():
        idx = [i for i in range(n) for _ in range(exp[i])]
        a, b = idx
        if a == b:
            s[a][a] = c
        else:
            s[a][b] = s[b][a] = f.mul(c, half)
    return s


def quadratic_form(field: FieldSpec, s: Sequence[Sequence]) -> MultiPoly:
    """对称矩阵 → 二次型"""
    n = len(s)
    two = field.from_int(2)
    terms = {}
    for a in range(n):
        for b in range(a, n):
            c = s[a][b] if a == b else field.mul(two, s[a][b])
            if c:
                exp = [0] * n
                exp[a] += 1
                exp[b] += 1
                terms[tuple(exp)] = c
    return MultiPoly(field, n, 2, terms)


def bilinear(field: FieldSpec, s: Sequence[Sequence], u: Sequence, v: Sequence):
    return field.dot(u, linalg.mat_vec(field, s, v))


def value(field: FieldSpec, s: Sequence[Sequence], v: Sequence):
    return bilinear(field, s, v, v)


def is_smooth(field: FieldSpec, s: Sequence[Sequence]) -> bool:
    return bool(linalg.det(field, s))


def embed_matrix(field: FieldSpec, s: Sequence[Sequence], target: FieldSpec) -> Matrix:
    return [[field.embed(x, target) for x in row] for row in s]


# ==================== 二次曲线 ====================

def random_smooth_conic(field: FieldSpec, rng: random.Random, attempts: int = 1000) -> Matrix:
    for _ in range(attempts):
        poly = MultiPoly.from_vector(field, 3, 2, [field.random_element(rng) for _ in range(6)])
        if poly.is_zero():
            continue
        s = symmetric_matrix(poly)
        if is_smooth(field, s):
            return s
    raise FieldError(f"no smooth conic found over {field!r}")


def conics_through(field: FieldSpec, points: Sequence[Sequence]) -> List[MultiPoly]:
    """过给定点的二次曲线空间的基"""
    exps = monomials(3, 2)
    rows = [monomial_values(field, exps, pt) for pt in points]
    return [MultiPoly.from_vector(field, 3, 2, v) for v in linalg.kernel(field, rows, len(exps))]


def conic_points(field: FieldSpec, s: Sequence[Sequence]) -> List[Tuple]:
    """枚举 P²(F) 上的点"""
    return [pt for pt in projective_points(field, 2) if not value(field, s, pt)]


def conic_intersection(field: FieldSpec, s: Sequence[Sequence], t: Sequence[Sequence]) -> List[Tuple]:
    return [pt for pt in conic_points(field, s) if not value(field, t, pt)]


def proportional(field: FieldSpec, s: Sequence[Sequence], t: Sequence[Sequence]) -> bool:
    flat_s = [x for row in s for x in row]
    flat_t = [x for row in t for x in row]
    return linalg.rank(field, [flat_s, flat_t]) < 2


# ==================== 二次曲面 ====================

def cone_over_conic(field: FieldSpec, conic: Sequence[Sequence], linear: Sequence) -> Matrix:
    """
    Q = C(x0,x1,x2) + t·(l0x0 + l1x1 + l2x2 + l3t) 的 4×4 矩阵

    Q 与平面 t = 0 的交正是 C。
    """
    half = _half(field)
    s = [list(row) + [field.mul(linear[i], half)] for i, row in enumerate(conic)]
    s.append([field.mul(linear[i], half) for i in range(3)] + [linear[3]])
    return s


def tangent_space(field: FieldSpec, s: Sequence[Sequence], q: Sequence) -> Matrix:
    """{y : B(q, y) = 0} 的基（光滑点处为 3 维）"""
    return linalg.kernel(field, [linalg.mat_vec(field, s, q)], len(q))


def ruling_lines(field: FieldSpec, s: Sequence[Sequence], q: Sequence) -> List[Matrix]:
    """
    光滑二次曲面上过点 q 的两条直线（每条以 2×4 行矩阵给出）

    切平面与曲面的交是过 q 的两条直线；需要开平方，域中无根时返回空列表。
    """
    tangent = tangent_space(field, s, q)
    u1 = u2 = None
    for a, b in combinations(tangent, 2):
        if linalg.rank(field, [q, a, b]) == 3:
            u1, u2 = a, b
            break
    if u1 is None:
        return []
    alpha = value(field, s, u1)
    beta = bilinear(field, s, u1, u2)
    gamma = value(field, s, u2)
    disc = field.sub(field.mul(beta, beta), field.mul(alpha, gamma))
    root = field.sqrt(disc)
    if root is None:
        return []
    if alpha:
        dirs = [(field.div(field.add(field.neg(beta), sgn), alpha), field.one) for sgn in (root, field.neg(root))]
    elif gamma:
        dirs = [(field.one, field.div(field.add(field.neg(beta), sgn), gamma)) for sgn in (root, field.neg(root))]
    else:
        dirs = [(field.one, field.zero), (field.zero, field.one)]
    lines = []
    for a, b in dirs:
        u = [field.add(field.mul(a, x), field.mul(b, y)) for x, y in zip(u1, u2)]
        lines.append([list(q), u])
    return lines


def lines_meet_point(field: FieldSpec, l1: Sequence[Sequence], l2: Sequence[Sequence]) -> Optional[Tuple]:
    """P³ 中两条直线交于一点时返回该点"""
    ker = linalg.left_kernel(field, list(l1) + list(l2))
    if len(ker) != 1:
        return None
    y = ker[0]
    return field.normalize(linalg.vec_mat(field, y[:2], l1))


def same_ruling(field: FieldSpec, l1: Sequence[Sequence], l2: Sequence[Sequence]) -> bool:
    """同族直线互不相交（或重合）"""
    r = linalg.rank(field, list(l1) + list(l2))
    return r == 4 or r == 2


def lift(field: FieldSpec, vec4: Sequence, extra: int) -> Tuple:
    """Π = ⟨e0,e1,e2,e_extra⟩ 中的坐标 → P^5 坐标"""
    out = [field.zero] * 6
    out[0], out[1], out[2] = vec4[0], vec4[1], vec4[2]
    out[extra] = vec4[3]
    return tuple(out)
