"""
平面组的关联验证、切空间秩与对偶
"""

from itertools import combinations
from typing import Optional, Sequence, Tuple

from ..algebra import linalg
from ..errors import ChartError
from ..grassmann import ALL_CHARTS, Plane, chart_matrix, intersection_point, meet, pairing
from ..log import logger
from .models import IncidenceReport, Provenance, TenConfig


def verify(cfg: TenConfig) -> IncidenceReport:
    """
    计算全部 C(N,2) 对的交维数、交点、Plücker 张成维数与迷向性

    失败只体现在报告标志上，不抛异常。
    """
    f = cfg.field
    n = len(cfg.planes)
    dims = [[2] * n for _ in range(n)]
    points = {}
    for i, j in combinations(range(n), 2):
        d = meet(cfg.planes[i], cfg.planes[j])
        dims[i][j] = dims[j][i] = d
        if d == 0:
            points[(i, j)] = intersection_point(cfg.planes[i], cfg.planes[j])

    pls = cfg.pluckers
    nonzero = [(i, j) for i, j in combinations(range(n), 2) if pairing(f, pls[i], pls[j])]
    all_incident = all(dims[i][j] >= 0 for i, j in combinations(range(n), 2))
    report = IncidenceReport(
        size=n,
        dims=dims,
        points=points,
        planes_distinct=cfg.planes_distinct(),
        all_incident=all_incident,
        points_distinct=len(points) == n * (n - 1) // 2 and len(set(points.values())) == len(points),
        span_dimension=linalg.rank(f, pls),
        isotropic=not nonzero,
        nonzero_pairings=nonzero,
    )
    logger.debug(
        f"🔍 关联验证: {report.incident_pairs}/{report.total_pairs} 对相交, "
        f"张成 {report.span_dimension}, 迷向 {report.isotropic}"
    )
    return report


def choose_chart(planes: Sequence[Plane]) -> Tuple[int, int, int]:
    """第一个与所有平面横截的坐标卡（字典序）"""
    for pivots in ALL_CHARTS:
        if all(linalg.rank(p.field, [[r[c] for c in pivots] for r in p.rows]) == 3 for p in planes):
            return pivots
    raise ChartError("no coordinate chart is transverse to every plane", rank_defect=1)


def tangent_rank(cfg: TenConfig, chart: Optional[Sequence[int]] = None) -> Tuple[int, int]:
    """
    关联簇在该配置处的切空间方程组秩

    每对 i<j 一个方程 Tr(adj(A_i − A_j)(X_i − X_j)) = 0，未知量为 X_1..X_N 的 9N 个元素。
    返回 (秩, 方程数 − 秩)。

    Raises:
        ChartError: 某个平面与所给坐标卡不横截
    """
    f = cfg.field
    pivots = tuple(chart) if chart is not None else choose_chart(cfg.planes)
    mats = [chart_matrix(p, pivots).matrix for p in cfg.planes]
    n = len(mats)
    rows = []
    for i, j in combinations(range(n), 2):
        adj = linalg.adjugate(f, linalg.mat_sub(f, mats[i], mats[j]))
        if not any(any(r) for r in adj):
            logger.warning(f"⚠️ 平面 {i},{j} 交于直线以上，切方程退化")
        row = [f.zero] * (9 * n)
        # Tr(M X) = Σ_{a,b} M[a][b] X[b][a]
        for a in range(3):
            for b in range(3):
                c = adj[a][b]
                if c:
                    row[9 * i + 3 * b + a] = c
                    row[9 * j + 3 * b + a] = f.neg(c)
        rows.append(row)
    r = linalg.rank(f, rows)
    logger.info(f"🧮 切空间方程组: {len(rows)}×{9 * n}, 秩 {r}（坐标卡 {pivots}）")
    return r, len(rows) - r


def annihilator(p: Plane) -> Plane:
    """平面的零化子，作为 P(V^∨) 中的平面"""
    return Plane(p.field, tuple(map(tuple, linalg.kernel(p.field, p.rows, 6))))


def dualize(cfg: TenConfig) -> TenConfig:
    """每个平面换成其零化子；对偶两次回到原平面"""
    prov = Provenance(
        recipe=f"dual:{cfg.provenance.recipe}",
        seed=cfg.provenance.seed,
        source=cfg.provenance.source,
        extra=dict(cfg.provenance.extra),
    )
    return TenConfig(cfg.field, tuple(annihilator(p) for p in cfg.planes), prov)
