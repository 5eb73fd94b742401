"""
⋀³V_6 中的 Lagrange 子空间与 EPW 六次超曲面

- corank: dim(F_v ∩ A)，F_v = v∧⋀²V
- epw_form: 由坐标卡行列式 g_c = x_c^4 · s 插值出六次型 s，并自我校验
- singular_samples / plane_sextic_curve / theta_enumerate: 采样与枚举检查
- product_membership / check_power: 与三次型乘积、幂的比较（均只到相差一个常数）
"""

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .algebra import linalg
from .algebra.fields import FieldSpec, extend_for_size, ext_field
from .algebra.interpolation import interpolate_function
from .algebra.polynomials import MultiPoly, forms_span_contains, upoly_roots
from .algebra.projective import projective_points, projective_size
from .constants import (
    EPW_CHECK_POINTS,
    EPW_DIVISION_LINES,
    EPW_MIN_FIELD_SIZE,
    INTERPOLATION_HOLDOUT,
    MUTUAL_ORACLE_SAMPLES,
    SINGULAR_SAMPLES_PER_PLANE,
    THETA_POINT_BUDGET,
)
from .errors import BudgetExceededError, DimensionError, DivisionError, FieldError, InterpolationError
from .grassmann import (
    COMPLEMENT,
    TRIPLES,
    Plane,
    is_decomposable,
    pairing,
    wedge_pair_vectors,
)
from .hypersurfaces import through_points
from .log import logger

SEXTIC = "sextic"
DEGENERATE = "identically degenerate"
PATH_DIVISION = "chart-division"
PATH_AFFINE = "affine-chart"

# 判定 g_c ≡ 0 时的随机取值次数
ZERO_TEST_POINTS = 20


# ==================== Lagrange 子空间 ====================

@dataclass(frozen=True)
class LagrangianSubspace:
    """
    ⋀³V_6 中的 10 维迷向子空间（行空间）

    构造时复核秩为 10 以及 45 对行配对全为零。
    """
    field: FieldSpec
    rows: Tuple[Tuple, ...]
    provenance: str = ""

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(r) != 20 for r in rows):
            raise DimensionError("Lagrangian rows live in the 20-dimensional wedge space", expected=20)
        r = linalg.rank(self.field, rows)
        if r != 10:
            raise DimensionError("a Lagrangian subspace has dimension 10", expected=10, actual=r)
        bad = [(i, j) for i, j in combinations(range(len(rows)), 2) if pairing(self.field, rows[i], rows[j])]
        if bad:
            raise DimensionError("subspace is not isotropic", expected="all pairings 0", actual=bad[:5])

    @classmethod
    def from_planes(cls, planes: Sequence[Plane], provenance: str = "") -> "LagrangianSubspace":
        """由平面的 Plücker 向量张成（取行空间的一组基）"""
        f = planes[0].field
        basis = linalg.row_basis(f, [p.plucker for p in planes])
        return cls(f, tuple(map(tuple, basis)), provenance)

    @classmethod
    def from_ten(cls, cfg) -> "LagrangianSubspace":
        return cls.from_planes(cfg.planes, provenance=cfg.provenance.recipe)

    def embed(self, target: FieldSpec) -> "LagrangianSubspace":
        if target == self.field:
            return self
        return LagrangianSubspace(target, tuple(tuple(self.field.embed(x, target) for x in r) for r in self.rows),
                                  self.provenance)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "rows": [[self.field.scalar_to_json(x) for x in r] for r in self.rows],
            "provenance": self.provenance,
        }


def span_e1_subspace(field: FieldSpec, index: int = 0) -> LagrangianSubspace:
    """span{e_{index,b,c}}：所有含下标 index 的三元组，等于 F_{e_index}"""
    rows = []
    for i, t in enumerate(TRIPLES):
        if index in t:
            rows.append(tuple(field.one if j == i else field.zero for j in range(20)))
    return LagrangianSubspace(field, tuple(rows), provenance=f"F_e{index}")


def random_lagrangian(field: FieldSpec, rng: random.Random) -> LagrangianSubspace:
    """
    随机 Lagrange 子空间：U' = ⋀³⟨e_1..e_5⟩ 上对称映射的图

    ⋀³V = U' ⊕ F_{e_0}，配对把 F_{e_0} 等同于 U' 的对偶；B 对称时图是迷向的。
    """
    outer = [i for i, t in enumerate(TRIPLES) if 0 not in t]
    b = [[field.zero] * 10 for _ in range(10)]
    for i in range(10):
        for j in range(i, 10):
            b[i][j] = b[j][i] = field.random_element(rng)
    rows = []
    for i, ti in enumerate(outer):
        row = [field.zero] * 20
        row[ti] = field.one
        for j, tj in enumerate(outer):
            comp, sign = COMPLEMENT[tj]
            row[comp] = b[i][j] if sign > 0 else field.neg(b[i][j])
        rows.append(tuple(row))
    return LagrangianSubspace(field, tuple(rows), provenance="random")


def dual_lagrangian(a: LagrangianSubspace) -> LagrangianSubspace:
    """Hodge 对偶 e_I ↦ sign(I, I^c)·e_{I^c}^*：平面的 Plücker 向量对应其零化子的 Plücker 向量"""
    f = a.field
    rows = []
    for r in a.rows:
        out = [f.zero] * 20
        for i, (j, sign) in enumerate(COMPLEMENT):
            if r[i]:
                out[j] = r[i] if sign > 0 else f.neg(r[i])
        rows.append(tuple(out))
    return LagrangianSubspace(f, tuple(rows), provenance=f"dual:{a.provenance}")


# ==================== 秩亏 ====================

def corank(a: LagrangianSubspace, v: Sequence) -> int:
    """k = 20 − rank(15 个 v∧e_a∧e_b 与 A 的 10 行堆成的 25×20 矩阵)"""
    if not any(v):
        raise DimensionError("corank needs a nonzero point")
    stack = wedge_pair_vectors(a.field, v) + [list(r) for r in a.rows]
    return 20 - linalg.rank(a.field, stack)


def intersection_with_fibre(a: LagrangianSubspace, v: Sequence) -> List[List]:
    """F_v ∩ A 的一组基"""
    f = a.field
    fibre = wedge_pair_vectors(f, v)
    stack = fibre + [list(r) for r in a.rows]
    vecs = []
    for y in linalg.left_kernel(f, stack):
        vecs.append(linalg.vec_mat(f, y[len(fibre):], a.rows))
    return linalg.row_basis(f, vecs) if vecs else []


def lagrangian_criterion(a: LagrangianSubspace, v: Sequence) -> int:
    """另一种秩亏：F_v 的基与 A 的配对矩阵 M，k = 10 − rank(M)"""
    f = a.field
    fv = linalg.row_basis(f, wedge_pair_vectors(f, v))
    m = [[pairing(f, u, w) for w in a.rows] for u in fv]
    return 10 - linalg.rank(f, m)


# ==================== EPW 六次型 ====================

def chart_determinant(a: LagrangianSubspace, c: int, v: Sequence):
    """g_c(v) = det[v∧e_a∧e_b (a<b, a,b ≠ c) | A 的行]"""
    rows = wedge_pair_vectors(a.field, v, skip=c) + [list(r) for r in a.rows]
    return linalg.det(a.field, rows)


@dataclass
class EpwResult:
    """
    epw_form 的结果

    form 定义在 work_field 上；base_form 是映回原域后的形式（系数都在原域时）。
    """
    verdict: str
    work_field: FieldSpec
    lagrangian: LagrangianSubspace
    form: Optional[MultiPoly] = None
    base_form: Optional[MultiPoly] = None
    chart: Optional[int] = None
    path: str = ""
    degenerate_charts: List[int] = field(default_factory=list)
    division_lines: int = 0
    checked_points: int = 0

    @property
    def is_degenerate(self) -> bool:
        return self.verdict == DEGENERATE

    def sextic(self) -> MultiPoly:
        return self.base_form if self.base_form is not None else self.form

    def to_dict(self) -> dict:
        out = {
            "verdict": self.verdict,
            "work_field": self.work_field.to_json(),
            "chart": self.chart,
            "path": self.path,
            "degenerate_charts": self.degenerate_charts,
            "division_lines": self.division_lines,
            "checked_points": self.checked_points,
        }
        if self.form is not None:
            out["form"] = self.sextic().to_json()
        return out


def _sampler_nonzero_at(field: FieldSpec, c: int):
    def draw(rng: random.Random) -> Tuple:
        pt = [field.random_element(rng) for _ in range(6)]
        pt[c] = field.random_nonzero(rng)
        return tuple(pt)
    return draw


def _sampler_affine(field: FieldSpec, c: int):
    def draw(rng: random.Random) -> Tuple:
        pt = [field.random_element(rng) for _ in range(6)]
        pt[c] = field.one
        return tuple(pt)
    return draw


def _sampler_line(field: FieldSpec):
    """直线参数 (1, t)，t 两两不同（Vandermonde 系统满秩）"""
    seen: Set = set()

    def draw(rng: random.Random) -> Tuple:
        t = field.random_element(rng)
        while t in seen:
            t = field.random_element(rng)
        seen.add(t)
        return (field.one, t)
    return draw


def _chart_is_zero(a: LagrangianSubspace, c: int, rng: random.Random) -> bool:
    draw = _sampler_nonzero_at(a.field, c)
    return all(not chart_determinant(a, c, draw(rng)) for _ in range(ZERO_TEST_POINTS))


def _division_check(a: LagrangianSubspace, c: int, sextic: MultiPoly, rng: random.Random, lines: int) -> None:
    """
    沿随机直线 v = s·α + t·β（β_c = 0）插值 G(s,t) = g_c(v)，再精确除以 α_c^4·s^4

    Raises:
        DivisionError: 不整除，或商与六次型在该直线上的限制不一致
        InterpolationError: 直线上插值失败
    """
    f = a.field
    for _ in range(lines):
        alpha = list(_sampler_nonzero_at(f, c)(rng))
        beta = [f.random_element(rng) for _ in range(6)]
        beta[c] = f.zero

        def along(st, alpha=alpha, beta=beta):
            s, t = st
            return chart_determinant(a, c, [f.add(f.mul(s, x), f.mul(t, y)) for x, y in zip(alpha, beta)])

        g_line = interpolate_function(f, 2, 10, along, rng, holdout=INTERPOLATION_HOLDOUT,
                                      sampler=_sampler_line(f))
        divisor = MultiPoly(f, 2, 4, {(4, 0): f.pow(alpha[c], 4)})
        quotient = g_line.divide_exact(divisor)
        if quotient != sextic.compose_rows([alpha, beta]):
            raise DivisionError("quotient disagrees with the sextic along a line")


def _verify_factor(a: LagrangianSubspace, c: int, sextic: MultiPoly, rng: random.Random,
                   points: int, allow_zero_coordinate: bool = True) -> int:
    """在新点上校验 g_c(v) = v_c^4 · s(v)（部分点取 v_c = 0）"""
    f = a.field
    for i in range(points):
        pt = [f.random_element(rng) for _ in range(6)]
        if allow_zero_coordinate and i % 5 == 0:
            pt[c] = f.zero
        elif not pt[c]:
            pt[c] = f.one
        lhs = chart_determinant(a, c, pt)
        rhs = f.mul(f.pow(pt[c], 4), sextic.evaluate(pt))
        if lhs != rhs:
            raise InterpolationError(f"g_{c} != x_{c}^4 * s at {tuple(pt)}")
    return points


def _map_back(form: MultiPoly, base: FieldSpec) -> Optional[MultiPoly]:
    work = form.field
    if work == base:
        return form
    if not hasattr(work, "in_prime_subfield") or base.k != 1:
        return None
    if not all(work.in_prime_subfield(c) for c in form.terms.values()):
        return None
    return form.map_coefficients(lambda c: base.coerce(work.to_coeffs(c)[0]), base)


def epw_form(a: LagrangianSubspace, seed: int = 0, check_points: int = EPW_CHECK_POINTS,
             division_lines: int = EPW_DIVISION_LINES) -> EpwResult:
    """
    EPW 六次型（相差常数），或判定 "identically degenerate"

    对每个坐标卡 c：插值 s = g_c / x_c^4，在新点复核并沿直线做精确整除；
    整除失败时改在仿射卡 x_c = 1 上插值再齐次化，并记录走的路径。
    域阶小于 101 时先扩域。

    Raises:
        InterpolationError: 两条路径的自检都失败
    """
    rng = random.Random(f"epw:{seed}")
    work = extend_for_size(a.field, EPW_MIN_FIELD_SIZE, seed)
    aw = a.embed(work)
    result = EpwResult(verdict=DEGENERATE, work_field=work, lagrangian=aw)

    for c in range(6):
        if _chart_is_zero(aw, c, rng):
            result.degenerate_charts.append(c)
            logger.debug(f"🔍 坐标卡 x{c}: g_c 恒为零")
            continue
        try:
            sextic = interpolate_function(
                work, 6, 6, lambda pt: work.div(chart_determinant(aw, c, pt), work.pow(pt[c], 4)),
                rng, holdout=INTERPOLATION_HOLDOUT, sampler=_sampler_nonzero_at(work, c),
            )
            result.checked_points = _verify_factor(aw, c, sextic, rng, check_points)
            _division_check(aw, c, sextic, rng, division_lines)
            result.path = PATH_DIVISION
            result.division_lines = division_lines
        except (DivisionError, InterpolationError) as e:
            logger.warning(f"⚠️ 坐标卡 x{c} 整除校验失败（{e}），改用仿射卡插值")
            sextic = interpolate_function(work, 6, 6, lambda pt: chart_determinant(aw, c, pt), rng,
                                          holdout=INTERPOLATION_HOLDOUT, sampler=_sampler_affine(work, c))
            result.checked_points = _verify_factor(aw, c, sextic, rng, check_points, allow_zero_coordinate=False)
            result.path = PATH_AFFINE
        result.verdict = SEXTIC
        result.chart = c
        result.form = sextic.normalize()[0]
        result.base_form = _map_back(result.form, a.field)
        logger.info(f"✅ EPW 六次型: 坐标卡 x{c}, 路径 {result.path}, {len(result.form.terms)} 项")
        return result

    logger.info("🧮 EPW: 所有坐标卡 g_c 恒为零，Y_A = P^5")
    return result


def cross_chart_agreement(a: LagrangianSubspace, c1: int, c2: int, rng: random.Random,
                          points: int = EPW_CHECK_POINTS) -> Tuple[bool, Optional[object]]:
    """g_{c1}/x_{c1}^4 与 g_{c2}/x_{c2}^4 在随机点上相差同一个常数；返回 (是否一致, 常数)"""
    f = a.field
    scalar = None
    for _ in range(points):
        pt = [f.random_element(rng) for _ in range(6)]
        for c in (c1, c2):
            if not pt[c]:
                pt[c] = f.one
        s1 = f.div(chart_determinant(a, c1, pt), f.pow(pt[c1], 4))
        s2 = f.div(chart_determinant(a, c2, pt), f.pow(pt[c2], 4))
        if not s1 and not s2:
            continue
        if not s1 or not s2:
            return False, None
        ratio = f.div(s2, s1)
        if scalar is None:
            scalar = ratio
        elif ratio != scalar:
            return False, None
    return scalar is not None, scalar


def check_power(s: MultiPoly, base: MultiPoly, exp: int) -> bool:
    """s = λ·base^exp（λ ≠ 0）"""
    return s.proportional_to(base.power(exp)) is not None


def product_membership(s: MultiPoly, cubics: Sequence[MultiPoly]) -> bool:
    """s 是否属于 66 个乘积 F_aF_b 张成的空间（462 维六次型空间中的秩比较）"""
    for c in cubics:
        if c.d != 3:
            raise DimensionError("product membership expects cubic forms", expected=3, actual=c.d)
    products = [cubics[i] * cubics[j] for i in range(len(cubics)) for j in range(i, len(cubics))]
    return forms_span_contains(s.field, products, s)


# ==================== 采样检查 ====================

def _embed_point(field: FieldSpec, pt: Sequence, target: FieldSpec) -> Tuple:
    return tuple(field.embed(x, target) for x in pt)


def _embed_plane(plane: Plane, target: FieldSpec) -> Plane:
    if plane.field == target:
        return plane
    return Plane(target, tuple(_embed_point(plane.field, r, target) for r in plane.rows))


def points_on_sextic(sextic: MultiPoly, rng: random.Random, count: int, max_lines: int = 10_000) -> List[Tuple]:
    """在随机直线上求六次型的根，得到超曲面上的点"""
    f = sextic.field
    out = []
    for _ in range(max_lines):
        if len(out) >= count:
            break
        a = [f.random_element(rng) for _ in range(6)]
        b = [f.random_element(rng) for _ in range(6)]
        restricted = sextic.compose_rows([a, b])
        if restricted.is_zero():
            continue
        # t = 1 仿射部分：系数按 s 的次数排列
        coeffs = [restricted.coefficient((i, 6 - i)) for i in range(7)]
        for root in upoly_roots(f, coeffs):
            pt = tuple(f.add(f.mul(root, x), y) for x, y in zip(a, b))
            if any(pt):
                out.append(pt)
    return out[:count]


def mutual_oracle(result: EpwResult, rng: random.Random, samples: int = MUTUAL_ORACLE_SAMPLES,
                  planes: Sequence[Plane] = ()) -> Dict[str, int]:
    """
    corank(A, v) ≥ 1 ⇔ s(v) = 0 的互相校验

    采样点三类：随机点、平面上的点、六次型在随机直线上的根。
    """
    if result.is_degenerate:
        raise DimensionError("mutual oracle needs a non-degenerate sextic")
    f = result.work_field
    a, s = result.lagrangian, result.form
    pts: List[Tuple] = []
    planes = [_embed_plane(p, f) for p in planes]
    third = samples // 3
    for i in range(third if planes else 0):
        pts.append(planes[i % len(planes)].random_point(rng))
    pts.extend(points_on_sextic(s, rng, third))
    while len(pts) < samples:
        pt = tuple(f.random_element(rng) for _ in range(6))
        if any(pt):
            pts.append(pt)
    counts = {"samples": len(pts), "agree": 0, "mismatch": 0, "on_sextic": 0}
    for pt in pts:
        on_y = corank(a, pt) >= 1
        zero = not s.evaluate(pt)
        counts["on_sextic"] += int(zero)
        counts["agree" if on_y == zero else "mismatch"] += 1
    return counts


@dataclass
class SingularSampleReport:
    planes: int = 0
    samples: int = 0
    confirmed: int = 0
    failures: List[Dict] = field(default_factory=list)
    point_coranks: Dict[int, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and self.confirmed == self.samples

    def to_dict(self) -> dict:
        return {
            "planes": self.planes,
            "samples": self.samples,
            "confirmed": self.confirmed,
            "failures": self.failures[:10],
            "point_coranks": {str(k): v for k, v in sorted(self.point_coranks.items())},
            "passed": self.passed,
        }


def singular_samples(result: EpwResult, planes: Sequence[Plane], rng: random.Random,
                     per_plane: int = SINGULAR_SAMPLES_PER_PLANE,
                     points: Sequence[Sequence] = ()) -> SingularSampleReport:
    """
    平面上的采样点应是六次超曲面的奇点：值和六个偏导都为零；
    另外记录给定交点处的秩亏分布
    """
    if result.is_degenerate:
        raise DimensionError("singular samples need a non-degenerate sextic")
    f = result.work_field
    s = result.form
    grads = s.gradient()
    report = SingularSampleReport(planes=len(planes))
    for idx, plane in enumerate(planes):
        plane = _embed_plane(plane, f)
        for _ in range(per_plane):
            pt = plane.random_point(rng)
            report.samples += 1
            if s.evaluate(pt) or any(g.evaluate(pt) for g in grads):
                report.failures.append({"plane": idx, "point": [f.scalar_to_json(x) for x in pt]})
            else:
                report.confirmed += 1
    base = planes[0].field if planes else f
    for pt in points:
        k = corank(result.lagrangian, _embed_point(base, pt, f))
        report.point_coranks[k] = report.point_coranks.get(k, 0) + 1
    if report.failures:
        logger.error(f"❌ 平面采样点不是奇点: {len(report.failures)} 处")
    return report


# ==================== 平面六次曲线 ====================

@dataclass
class PlaneCurveReport:
    points_scanned: int = 0
    corank2_points: int = 0
    fit_dimension: Optional[int] = None
    curve: Optional[MultiPoly] = None

    @property
    def found(self) -> bool:
        return self.corank2_points > 0

    def to_dict(self) -> dict:
        return {
            "points_scanned": self.points_scanned,
            "corank2_points": self.corank2_points,
            "fit_dimension": self.fit_dimension,
            "curve": self.curve.to_json() if self.curve is not None else None,
            "status": "fit" if self.found else "no points",
        }


def plane_sextic_curve(a: LagrangianSubspace, plane: Plane, max_degree: int = 1,
                       budget: int = THETA_POINT_BUDGET, seed: int = 0) -> PlaneCurveReport:
    """
    枚举平面上的点（域 F_q，素域时可到 F_{q^2}），收集 corank ≥ 2 的点并拟合三元六次曲线

    Raises:
        BudgetExceededError: 平面点数超出预算
    """
    f = a.field
    if not f.is_finite:
        raise FieldError("plane curve scan needs a finite field")
    degrees = list(range(1, max_degree + 1)) if f.k == 1 else [1]
    total = sum(projective_size(f.order ** k, 2) for k in degrees)
    if total > budget:
        raise BudgetExceededError("plane sextic scan", total, budget)
    report = PlaneCurveReport()
    coords: List[Tuple] = []
    fit_field = f
    for k in degrees:
        work = f if k == 1 else ext_field(f.p, k, seed)
        aw, pw = a.embed(work), _embed_plane(plane, work)
        for s in projective_points(work, 2):
            report.points_scanned += 1
            if corank(aw, pw.point(s)) >= 2:
                coords.append((k, s))
        fit_field = work
    report.corank2_points = len(coords)
    if coords:
        lifted = [tuple(f.embed(x, fit_field) for x in s) if k == 1 and fit_field != f else s for k, s in coords]
        sys, _ = through_points(fit_field, lifted, 6, n=3)
        report.fit_dimension = sys.dimension
        if sys.dimension == 1:
            report.curve = sys.basis[0].normalize()[0]
    else:
        logger.info("🔍 平面内没有 corank ≥ 2 的点")
    return report


# ==================== Θ_A ====================

def _check_theta_field(a: LagrangianSubspace) -> None:
    if not a.field.is_finite or a.field.k != 1:
        raise FieldError("theta enumeration runs over a prime field")


def theta_enumerate(a: LagrangianSubspace, budget: int = THETA_POINT_BUDGET) -> Set[Tuple]:
    """
    P(A)(F_p) 中全部可分解向量对应的平面（返回规范行组成的集合）

    按纤维组织扫描：平面 Λ 的 Plücker 向量落在 A 中时，对 Λ 上每一点 v 都有 ω ∈ F_v ∩ A。
    所以只需对 P^5(F_p) 的每个 v 枚举 P(F_v ∩ A)。

    Raises:
        BudgetExceededError: |P^9(F_p)| 或累计枚举点数超出预算
    """
    _check_theta_field(a)
    f = a.field
    needed = projective_size(f.p, 9)
    if needed > budget:
        raise BudgetExceededError("theta enumeration", needed, budget)
    found: Set[Tuple] = set()
    enumerated = 0
    for v in projective_points(f, 5):
        basis = intersection_with_fibre(a, v)
        if not basis:
            continue
        enumerated += projective_size(f.p, len(basis) - 1)
        if enumerated > budget:
            raise BudgetExceededError("theta enumeration (fibres)", enumerated, budget)
        for c in projective_points(f, len(basis) - 1):
            omega = linalg.vec_mat(f, c, basis)
            plane = is_decomposable(f, omega)
            if plane is not None:
                found.add(plane.canonical_rows())
    logger.info(f"🔍 Θ_A 枚举完成: {len(found)} 个平面（纤维内共枚举 {enumerated} 个向量）")
    return found


def theta_enumerate_direct(a: LagrangianSubspace, budget: int = THETA_POINT_BUDGET) -> Set[Tuple]:
    """逐点扫描 P(A) = P^9(F_p)；与 theta_enumerate 结果相同，适合小素数交叉校验"""
    _check_theta_field(a)
    f = a.field
    needed = projective_size(f.p, 9)
    if needed > budget:
        raise BudgetExceededError("theta enumeration", needed, budget)
    found: Set[Tuple] = set()
    for c in projective_points(f, 9):
        plane = is_decomposable(f, linalg.vec_mat(f, c, a.rows))
        if plane is not None:
            found.add(plane.canonical_rows())
    return found
