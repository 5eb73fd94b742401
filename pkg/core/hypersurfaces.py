"""
P^5 中超曲面的线性系统

- through_planes / through_points: 含平面（或过点）的 d 次型空间
- unique_form: 一维系统的规范生成元
- singular_scan: 有限域上的奇点枚举（只给出部分证书）
- restrict_to_plane / position_check: 限制到平面与平面点组的位置检查
"""

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import divisors

from .algebra import linalg
from .algebra.fields import FieldSpec, ext_field
from .algebra.polynomials import MultiPoly, monomial_values, monomials
from .algebra.projective import projective_points, projective_size
from .constants import DEFAULT_POINT_BUDGET, FORM_CHECK_POINTS
from .errors import BudgetExceededError, DimensionError, FieldError, InconsistentSystemError
from .grassmann import Plane
from .log import logger


@dataclass(frozen=True)
class FormSystem:
    """
    d 次型的线性系统

    basis 线性无关且每个元素都满足所有施加的条件；condition_rank 为条件矩阵的秩。
    """
    field: FieldSpec
    n: int
    degree: int
    basis: Tuple[MultiPoly, ...]
    condition_rank: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def expected_dimension(self) -> int:
        return len(monomials(self.n, self.degree)) - self.condition_rank

    def contains(self, form: MultiPoly) -> bool:
        rows = [b.to_vector() for b in self.basis]
        return linalg.rank(self.field, rows + [form.to_vector()]) == len(rows)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.degree,
            "dimension": self.dimension,
            "condition_rank": self.condition_rank,
            "basis": [b.to_json() for b in self.basis],
        }


def system_from_conditions(field: FieldSpec, n: int, d: int, rows: Sequence[Sequence]) -> FormSystem:
    """条件矩阵（列对应 n 元 d 次单项式）的零空间"""
    ncols = len(monomials(n, d))
    r = linalg.rank(field, rows) if rows else 0
    basis = tuple(MultiPoly.from_vector(field, n, d, v) for v in linalg.kernel(field, rows, ncols)) if rows else \
        tuple(MultiPoly.from_vector(field, n, d, [field.one if j == i else field.zero for j in range(ncols)])
              for i in range(ncols))
    return FormSystem(field, n, d, basis, r)


def plane_conditions(plane: Plane, d: int) -> List[List]:
    """限制到平面后的 C(d+2,2) 个系数，作为关于型系数的线性条件"""
    f = plane.field
    exps = monomials(6, d)
    tern = monomials(3, d)
    cols = []
    for e in exps:
        restricted = MultiPoly(f, 6, d, {e: f.one}).compose_rows(plane.rows)
        cols.append([restricted.coefficient(t) for t in tern])
    return linalg.transpose(cols)


def through_planes(planes: Sequence[Plane], d: int) -> FormSystem:
    """在每个平面上恒为零的 d 次型"""
    if d < 1:
        raise DimensionError("degree must be positive", expected=">= 1", actual=d)
    if not planes:
        raise DimensionError("at least one plane is required", expected=">= 1", actual=0)
    f = planes[0].field
    rows = []
    for p in planes:
        rows.extend(plane_conditions(p, d))
    sys = system_from_conditions(f, 6, d, rows)
    logger.debug(f"🧮 过 {len(planes)} 个平面的 {d} 次型: 维数 {sys.dimension}")
    return sys


def through_points(field: FieldSpec, points: Sequence[Sequence], d: int, n: int = 6) -> Tuple[FormSystem, int]:
    """过给定点的 d 次型；返回 (系统, 条件秩)"""
    exps = monomials(n, d)
    rows = [monomial_values(field, exps, pt) for pt in points]
    sys = system_from_conditions(field, n, d, rows)
    return sys, sys.condition_rank


def unique_form(sys: FormSystem) -> MultiPoly:
    """
    Raises:
        DimensionError: 系统维数不为 1
    """
    if sys.dimension != 1:
        raise DimensionError("linear system is not one-dimensional", expected=1, actual=sys.dimension)
    return sys.basis[0].normalize()[0]


def check_on_planes(sys: FormSystem, planes: Sequence[Plane], rng: random.Random,
                    points_per_plane: int = FORM_CHECK_POINTS) -> bool:
    """在每个平面的随机点上独立复核基元素为零"""
    for p in planes:
        for _ in range(points_per_plane):
            pt = p.random_point(rng)
            if any(b.evaluate(pt) for b in sys.basis):
                return False
    return True


def check_at_points(sys: FormSystem, points: Sequence[Sequence]) -> bool:
    return all(not b.evaluate(pt) for b in sys.basis for pt in points)


def restrict_to_plane(form: MultiPoly, plane: Plane) -> MultiPoly:
    """代入平面参数化，得到三元同次型"""
    return form.compose_rows(plane.rows)


# ==================== 奇点扫描 ====================

@dataclass
class SingularScanReport:
    """
    奇点扫描结果

    没找到奇点时 partial_certificate 为 True：只说明在已扫描的域上没有奇点，不是光滑性证明。
    """
    points: List[Tuple[int, Tuple]] = field(default_factory=list)
    scanned: List[Dict[str, int]] = field(default_factory=list)
    max_degree: int = 1

    @property
    def partial_certificate(self) -> bool:
        return not self.points

    @property
    def statement(self) -> str:
        if self.points:
            return f"{len(self.points)} singular point(s) found"
        return f"no singular point found up to F_{{p^{self.max_degree}}} (partial certificate)"

    def to_dict(self, encode=None) -> dict:
        enc = encode or (lambda k, pt: list(pt))
        return {
            "points": [{"k": k, "point": enc(k, pt)} for k, pt in self.points],
            "scanned": self.scanned,
            "partial_certificate": self.partial_certificate,
            "statement": self.statement,
        }


def _from_smaller_field(fld: FieldSpec, k: int, pt: Sequence) -> bool:
    """规范化坐标全部落在某个真子域 F_{p^d}（d | k, d < k）中"""
    for d in divisors(k)[:-1]:
        q = fld.p ** d
        if all(fld.pow(x, q) == x for x in pt):
            return True
    return False


def singular_scan(form: MultiPoly, max_degree: int = 1, budget: int = DEFAULT_POINT_BUDGET,
                  seed: int = 0) -> SingularScanReport:
    """
    枚举 P^{n-1}(F_{p^k})，k = 1..K，返回 f 与全部偏导同时为零的点

    f 的系数域必须是素域（扩域系数时只扫描该域本身）。

    Raises:
        BudgetExceededError: 总点数超过预算
    """
    base = form.field
    if not base.is_finite:
        raise FieldError("singular scan needs a finite field")
    n = form.n
    degrees = list(range(1, max_degree + 1)) if base.k == 1 else [1]
    sizes = [projective_size(base.p ** (k * base.k), n - 1) for k in degrees]
    if sum(sizes) > budget:
        raise BudgetExceededError("singular scan", sum(sizes), budget)

    report = SingularScanReport(max_degree=max_degree)
    for k, size in zip(degrees, sizes):
        fld = base if k == 1 else ext_field(base.p, k, seed)
        f = form if k == 1 else form.map_coefficients(lambda c: base.embed(c, fld), fld)
        grads = f.gradient()
        found = 0
        for pt in projective_points(fld, n - 1):
            if any(g.evaluate(pt) for g in grads):
                continue
            if f.evaluate(pt):
                continue
            if k > 1 and _from_smaller_field(fld, k, pt):
                continue
            report.points.append((k, pt))
            found += 1
        report.scanned.append({"k": k, "order": fld.order, "points": size, "singular": found})
        logger.debug(f"🔍 奇点扫描 F_{fld.order}: {size} 个点, 奇点 {found}")
    logger.info(f"🔍 奇点扫描完成: {report.statement}")
    return report


# ==================== 平面点组位置 ====================

@dataclass
class PositionReport:
    collinear_triples: List[Tuple[int, ...]] = field(default_factory=list)
    conic_sextuples: List[Tuple[int, ...]] = field(default_factory=list)
    cubic_dimension: int = 0

    def to_dict(self) -> dict:
        return {
            "collinear_triples": [list(t) for t in self.collinear_triples],
            "conic_sextuples": [list(t) for t in self.conic_sextuples],
            "cubic_dimension": self.cubic_dimension,
        }


def position_check(field: FieldSpec, points: Sequence[Sequence]) -> PositionReport:
    """
    平面点组（P² 坐标）的位置检查：三点共线、六点共二次曲线、过全部点的三次曲线空间维数
    """
    if not 2 <= len(points) <= 12:
        raise DimensionError("position check takes 2 to 12 points", expected="2..12", actual=len(points))
    report = PositionReport()
    for idx in combinations(range(len(points)), 3):
        if linalg.rank(field, [points[i] for i in idx]) < 3:
            report.collinear_triples.append(idx)
    conic_exps = monomials(3, 2)
    for idx in combinations(range(len(points)), 6):
        rows = [monomial_values(field, conic_exps, points[i]) for i in idx]
        if linalg.rank(field, rows) < 6:
            report.conic_sextuples.append(idx)
    report.cubic_dimension = through_points(field, points, 3, n=3)[0].dimension
    return report


def plane_coordinates(plane: Plane, point: Sequence) -> Optional[Tuple]:
    """平面内点在行基下的坐标"""
    try:
        return tuple(linalg.solve_vector(plane.field, linalg.transpose(plane.rows), point))
    except InconsistentSystemError:
        return None
