"""
平面组构造

- construct_3331: 三条二次曲线给出的 3-3-3-1 型十平面（F_{29²}）
- construct_morin13: 三个二次曲面的切平面加 Λ，共 13 个两两相交的平面
- construct_reye_family: 光滑二次曲面同一族平面中取十个
- random_ten / load_ten: 随机对照组与外部导入
"""

import json
import random
from itertools import combinations, permutations
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..algebra import linalg
from ..algebra.fields import FieldSpec, ext_field
from ..algebra.polynomials import MultiPoly
from ..constants import (
    CITATIONS,
    CONSTRUCTION_ATTEMPTS,
    MORIN_PLANE_COUNT,
    THREE_CONIC_CONICS,
    THREE_CONIC_INTERSECTIONS,
    THREE_CONIC_PRIME,
)
from ..errors import ConstructionError, ToolkitError
from ..grassmann import Plane, intersection_point, meet, random_plane
from ..log import logger
from . import quadrics
from .incidence import verify
from .models import Provenance, TenConfig

BASE_PLANE_INDICES = (0, 1, 2)

# 3331 构造的匹配总数：每个二次曲面两种直线族分配 × E^1、E^2 的排列
RULING_CHOICES = 8
MATCHING_COUNT = RULING_CHOICES * 36


def base_plane(field: FieldSpec) -> Plane:
    """Λ = ⟨e0, e1, e2⟩"""
    return Plane.coordinate(field, BASE_PLANE_INDICES)


def _missing(i: int, j: int) -> int:
    return 3 - i - j


def _other_two(k: int) -> Tuple[int, int]:
    return tuple(x for x in range(3) if x != k)


# ==================== 3-3-3-1 型 ====================

def three_conic_data(field: FieldSpec) -> Tuple[List[MultiPoly], Dict[int, List[Tuple]]]:
    """
    三条二次曲线与 E^k = C_i ∩ C_j \\ {e_k}（{i,j,k} = {0,1,2}）

    Raises:
        ConstructionError: 给定交点不在对应的两条二次曲线上
    """
    conics = [MultiPoly.from_ints(field, 3, terms) for terms in THREE_CONIC_CONICS]
    e_sets = {}
    for (i, j), pts in THREE_CONIC_INTERSECTIONS.items():
        coerced = [tuple(field.coerce(x) for x in pt) for pt in pts]
        for pt in coerced:
            if conics[i].evaluate(pt) or conics[j].evaluate(pt):
                raise ConstructionError(f"point {pt} is not on C_{i} and C_{j}", CITATIONS["three_conic.conics"])
        e_sets[_missing(i, j)] = coerced[1:]
    return conics, e_sets


def _decode_matching(index: int) -> Tuple[Tuple[int, int, int], Tuple[Tuple[int, ...], ...]]:
    bits = tuple((index >> b) & 1 for b in range(3))
    perm_index = index // RULING_CHOICES
    perms = list(permutations(range(3)))
    return bits, ((0, 1, 2), perms[perm_index // 6], perms[perm_index % 6])


def _rulings_on_quadric(field: FieldSpec, s, points_by_set: Dict[int, List[Tuple]]) -> Dict[Tuple[int, int], List]:
    """
    每个点的两条直线按直线族排序：键 (E 集合编号, 点序号) → [族 0 直线, 族 1 直线]

    Raises:
        ConstructionError: 某点处切平面截出的直线不在当前域上
    """
    ref = None
    out = {}
    for k, pts in sorted(points_by_set.items()):
        for m, pt in enumerate(pts):
            lines = quadrics.ruling_lines(field, s, list(pt) + [field.zero])
            if len(lines) != 2:
                raise ConstructionError(f"ruling lines through {pt} are not defined over {field!r}")
            if ref is None:
                ref = lines[0]
            if quadrics.same_ruling(field, ref, lines[0]):
                out[(k, m)] = lines
            else:
                out[(k, m)] = [lines[1], lines[0]]
    return out


def _three_conic_planes(field: FieldSpec, rulings, e_sets, matching: int) -> Optional[List[Plane]]:
    bits, perms = _decode_matching(matching)
    order = {k: [e_sets[k][perms[k][m]] for m in range(3)] for k in range(3)}
    index_of = {k: [perms[k][m] for m in range(3)] for k in range(3)}

    def line(i: int, k: int, m: int):
        family = bits[i] if k == _other_two(i)[0] else 1 - bits[i]
        return rulings[i][(k, index_of[k][m])][family]

    # p^i_m = 二次曲面 Q_i 上分别过 E^j、E^k 第 m 个点的两条异族直线的交点
    corner = {}
    for i in range(3):
        j, k = _other_two(i)
        for m in range(3):
            pt = quadrics.lines_meet_point(field, line(i, j, m), line(i, k, m))
            if pt is None:
                return None
            corner[(i, m)] = quadrics.lift(field, pt, 3 + i)

    planes = []
    for k in range(3):
        i, j = _other_two(k)
        for m in range(3):
            q = tuple(order[k][m]) + (field.zero,) * 3
            rows = (q, corner[(i, m)], corner[(j, m)])
            if linalg.rank(field, rows) < 3:
                return None
            planes.append(Plane(field, rows))
    planes.append(base_plane(field))
    return planes


def construct_3331(seed: int = 0, matching: Optional[int] = None,
                   attempts: int = 50) -> TenConfig:
    """
    3-3-3-1 型十平面：九个平面 Λ_{km} = ⟨q^k_m, p^i_m, p^j_m⟩ 加上 Λ

    二次曲面 Q_i = C_i + x_{3+i}·L_i 的 L_i 由种子随机选取；
    直线族/点的匹配按 matching 优先、其余依次搜索，直到 verify 通过。

    Raises:
        ConstructionError: 所有匹配都未通过验证
    """
    base = ext_field(THREE_CONIC_PRIME, 1)
    field = ext_field(THREE_CONIC_PRIME, 2)
    conics, e_sets = three_conic_data(base)
    e_sets = {k: [tuple(base.embed(x, field) for x in pt) for pt in pts] for k, pts in e_sets.items()}
    conic_mats = [quadrics.embed_matrix(base, quadrics.symmetric_matrix(c), field)
                  for c in conics]
    rng = random.Random(f"3331:{seed}")

    for attempt in range(attempts):
        linears = [[base.random_element(rng) for _ in range(4)] for _ in range(3)]
        mats = [quadrics.cone_over_conic(field, conic_mats[i], [base.embed(x, field) for x in linears[i]])
                for i in range(3)]
        if not all(quadrics.is_smooth(field, s) for s in mats):
            continue
        try:
            rulings = [
                _rulings_on_quadric(field, mats[i], {k: e_sets[k] for k in _other_two(i)})
                for i in range(3)
            ]
        except ConstructionError as e:
            logger.debug(f"🔍 3331 第 {attempt + 1} 组二次曲面跳过: {e}")
            continue

        candidates = list(range(MATCHING_COUNT))
        if matching is not None:
            candidates.remove(matching)
            candidates.insert(0, matching)
        for idx in candidates:
            planes = _three_conic_planes(field, rulings, e_sets, idx)
            if planes is None:
                continue
            cfg = TenConfig(field, tuple(planes), Provenance(
                recipe="3331",
                seed=seed,
                source=CITATIONS["three_conic.verify"],
                extra={
                    "matching": idx,
                    "attempt": attempt,
                    "linear_forms": [[base.scalar_to_json(x) for x in l] for l in linears],
                },
            ))
            if verify(cfg).lagrangian_spanning:
                logger.info(f"✅ 3331 十平面构造完成（匹配 {idx}，第 {attempt + 1} 组二次曲面）")
                return cfg
            logger.debug(f"🔍 3331 匹配 {idx} 未通过验证")

    logger.error("❌ 3331 构造: 没有匹配通过验证")
    raise ConstructionError("no ruling matching verifies", CITATIONS["three_conic.verify"])


# ==================== Morin 13 ====================

MORIN_TANGENT_PAIRS = ((0, 1), (1, 2), (2, 0))


def _morin_conics(field: FieldSpec, rng: random.Random):
    """C_0 随机；C_1 过 C_0 上四点；C_2 过 C_0 上两点和 C_1 上三点"""
    c0 = quadrics.random_smooth_conic(field, rng)
    pts0 = quadrics.conic_points(field, c0)
    if len(pts0) < 6:
        return None
    shared01 = rng.sample(pts0, 4)
    pencil = quadrics.conics_through(field, shared01)
    if len(pencil) != 2:
        return None
    a, b = field.random_element(rng), field.random_element(rng)
    c1 = quadrics.symmetric_matrix(pencil[0].scale(a) + pencil[1].scale(b)) if (a or b) else None
    if c1 is None or not quadrics.is_smooth(field, c1) or quadrics.proportional(field, c0, c1):
        return None
    rest0 = [p for p in pts0 if p not in shared01]
    rest1 = [p for p in quadrics.conic_points(field, c1) if p not in shared01]
    if len(rest0) < 2 or len(rest1) < 3:
        return None
    through = quadrics.conics_through(field, rng.sample(rest0, 2) + rng.sample(rest1, 3))
    if len(through) != 1:
        return None
    c2 = quadrics.symmetric_matrix(through[0])
    if not quadrics.is_smooth(field, c2):
        return None
    return [c0, c1, c2]


def _split_intersections(field: FieldSpec, conics) -> Optional[Dict[Tuple[int, int], List[Tuple]]]:
    out = {}
    for i, j in MORIN_TANGENT_PAIRS:
        pts = quadrics.conic_intersection(field, conics[i], conics[j])
        if len(pts) != 4:
            return None
        out[(i, j)] = pts
    return out


def construct_morin13(field: FieldSpec, seed: int = 0,
                      attempts: int = CONSTRUCTION_ATTEMPTS) -> TenConfig:
    """
    13 个两两相交的平面

    Λ = ⟨e0,e1,e2⟩，Π_i = ⟨Λ, e_{3+i}⟩；二次曲面 Q_i ⊂ Π_i 截 Λ 于 C_i。
    对 (i, j) ∈ {(0,1), (1,2), (2,0)}，取 Q_i 在 C_i ∩ C_j 四个点处的切平面。
    交点在素域上不全部分裂时改在二次扩域上工作。

    Raises:
        ConstructionError: 预算内没有找到合适的二次曲线
    """
    rng = random.Random(f"morin13:{seed}")
    for attempt in range(attempts):
        conics = _morin_conics(field, rng)
        if conics is None:
            continue
        work = field
        meets = _split_intersections(work, conics)
        if meets is None and field.k == 1:
            work = ext_field(field.p, 2)
            conics_ext = [quadrics.embed_matrix(field, c, work) for c in conics]
            meets = _split_intersections(work, conics_ext)
        if meets is None:
            continue
        linears = []
        mats = []
        for i in range(3):
            for _ in range(attempts):
                lin = [field.random_element(rng) for _ in range(4)]
                s = quadrics.cone_over_conic(field, conics[i], lin)
                if quadrics.is_smooth(field, s):
                    break
            else:
                raise ConstructionError("no smooth quadric over the conic", CITATIONS["morin.incidence"])
            linears.append(lin)
            mats.append(quadrics.embed_matrix(field, s, work))

        planes = []
        for (i, j) in MORIN_TANGENT_PAIRS:
            for pt in meets[(i, j)]:
                tangent = quadrics.tangent_space(work, mats[i], list(pt) + [work.zero])
                planes.append(Plane(work, tuple(quadrics.lift(work, v, 3 + i) for v in tangent)))
        planes.append(base_plane(work))

        cfg = TenConfig(work, tuple(planes), Provenance(
            recipe="morin13",
            seed=seed,
            source=CITATIONS["morin.incidence"],
            extra={
                "attempt": attempt,
                "quadrics": [[[work.scalar_to_json(x) for x in row] for row in s] for s in mats],
                "tangent_pairs": [list(p) for p in MORIN_TANGENT_PAIRS],
            },
        ))
        report = verify(cfg)
        if report.all_incident and report.planes_distinct and len(cfg) == MORIN_PLANE_COUNT:
            logger.info(f"✅ Morin 13 平面构造完成（{work!r}，第 {attempt + 1} 次尝试）")
            return cfg
        logger.debug(f"🔍 Morin 第 {attempt + 1} 次尝试未通过验证")
    logger.error("❌ Morin 13 构造: 预算耗尽")
    raise ConstructionError("search budget exhausted", CITATIONS["morin.incidence"])


def morin_sanity(cfg: TenConfig) -> Dict[str, int]:
    """
    每对平面的交点落在 Λ 上或某个 Q_i 上；交于直线的对另计

    需要 provenance.extra["quadrics"]（construct_morin13 会写入）。
    """
    f = cfg.field
    mats = [[[f.scalar_from_json(x) for x in row] for row in s] for s in cfg.provenance.extra.get("quadrics", [])]
    counts = {"in_base_plane": 0, "on_quadric": 0, "line_pairs": 0, "unexplained": 0}
    for a, b in combinations(range(len(cfg)), 2):
        d = meet(cfg.planes[a], cfg.planes[b])
        if d >= 1:
            counts["line_pairs"] += 1
            continue
        if d < 0:
            counts["unexplained"] += 1
            continue
        pt = intersection_point(cfg.planes[a], cfg.planes[b])
        if not any(pt[3:]):
            counts["in_base_plane"] += 1
            continue
        hit = False
        for i, s in enumerate(mats):
            if all(not pt[3 + j] for j in range(3) if j != i):
                if not quadrics.value(f, s, [pt[0], pt[1], pt[2], pt[3 + i]]):
                    hit = True
        counts["on_quadric" if hit else "unexplained"] += 1
    return counts


# ==================== Reye 族与随机对照 ====================

RULING_QUADRIC = "x0*x3 + x1*x4 + x2*x5"


def _skew_plane(field: FieldSpec, a, b, c) -> Plane:
    """{(x, Sx)}，S 为斜对称矩阵 [[0,a,b],[-a,0,c],[-b,-c,0]]"""
    s = [[field.zero, a, b], [field.neg(a), field.zero, c], [field.neg(b), field.neg(c), field.zero]]
    rows = []
    for r in range(3):
        e = [field.one if t == r else field.zero for t in range(3)]
        rows.append(tuple(e + [s[t][r] for t in range(3)]))
    return Plane(field, tuple(rows))


def construct_reye_family(field: FieldSpec, seed: int = 0,
                          attempts: int = CONSTRUCTION_ATTEMPTS) -> TenConfig:
    """
    光滑二次曲面 x0x3 + x1x4 + x2x5 上同一族的十个平面

    同族两平面之差 S − T 是 3×3 斜对称矩阵，必有非零核，所以两两相交。

    Raises:
        ConstructionError: 预算内未取到张成 10 维的十个平面
    """
    rng = random.Random(f"reye:{seed}")
    for attempt in range(attempts):
        params = set()
        while len(params) < 10:
            params.add(tuple(field.random_element(rng) for _ in range(3)))
        planes = tuple(_skew_plane(field, *abc) for abc in sorted(params))
        if linalg.rank(field, [p.plucker for p in planes]) == 10:
            logger.info(f"✅ 二次曲面同族十平面构造完成（第 {attempt + 1} 次尝试）")
            return TenConfig(field, planes, Provenance(
                recipe="reye",
                seed=seed,
                source="ten planes from one ruling of the quadric " + RULING_QUADRIC,
                extra={"skew_parameters": [[field.scalar_to_json(x) for x in abc] for abc in sorted(params)]},
            ))
    raise ConstructionError("no spanning ten in the ruling family", "ruling family of a smooth quadric")


def random_ten(field: FieldSpec, seed: int = 0, count: int = 10) -> TenConfig:
    rng = random.Random(f"random:{seed}")
    planes = tuple(random_plane(field, rng) for _ in range(count))
    return TenConfig(field, planes, Provenance(recipe="random", seed=seed, source="seeded random planes"))


def load_ten(path) -> TenConfig:
    """
    读取外部十平面 JSON

    Raises:
        ConstructionError: 文件缺失或内容不是合法的平面组
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        cfg = TenConfig.from_json(data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError, ToolkitError) as e:
        raise ConstructionError(f"cannot load plane configuration from {path}: {e}", "import") from e
    if not cfg.provenance.source:
        cfg.provenance.source = str(path)
    if cfg.provenance.recipe == "import":
        logger.info(f"📦 已导入 {len(cfg)} 个平面: {path}")
    return cfg
