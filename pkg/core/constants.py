"""
工具包常量定义

所有固定数据（论文中给出的二次型、交点、Winger 六次曲线系数）和
采样规模、预算集中在这里管理，方便对照与调整。
"""

from typing import Dict, List, Tuple


# ==================== 版本 ====================

TOOLKIT_VERSION = "1.0.0"


# ==================== 域与线性代数 ====================

# 扩域乘法使用对数表的最大域阶
LOG_TABLE_LIMIT = 1 << 20

# 极小多项式随机搜索的最大尝试次数
MIN_POLY_SEARCH_BUDGET = 10_000

# 有理数域随机元素的分子/分母范围
RATIONAL_SAMPLE_RANGE = 50


# ==================== 插值与采样 ====================

# 插值留出校验点数
INTERPOLATION_HOLDOUT = 20

# 样本系统降秩时重新抽样的次数
INTERPOLATION_ATTEMPTS = 4

# EPW 插值所需的最小域阶（不足时自动扩域）
EPW_MIN_FIELD_SIZE = 101

# EPW 六次型校验点数（留出校验、跨坐标卡比较）
EPW_CHECK_POINTS = 100

# 沿直线做 x_c^4 整除校验的直线条数
EPW_DIVISION_LINES = 5

# 每个平面上的奇异性采样点数
SINGULAR_SAMPLES_PER_PLANE = 100

# corank / epw_form 互为预言机的采样点数
MUTUAL_ORACLE_SAMPLES = 1000

# 超曲面基元素独立复核时每个平面的随机点数
FORM_CHECK_POINTS = 50


# ==================== 预算 ====================

# 默认枚举点数预算
DEFAULT_POINT_BUDGET = 10_000_000

# Θ_A 枚举默认预算
THETA_POINT_BUDGET = 3_000_000

# 随机构造（二次曲面、二次曲线）的最大尝试次数
CONSTRUCTION_ATTEMPTS = 2_000


# ==================== 三条二次曲线构造 ====================

THREE_CONIC_PRIME = 29

# Λ = ⟨e0,e1,e2⟩ 坐标 (x0,x1,x2) 下的三条二次曲线，指数 -> 系数
THREE_CONIC_CONICS: Tuple[Dict[Tuple[int, int, int], int], ...] = (
    # C_0 = x0^2 - 7 x0 x2 - 12 x1 x2
    {(2, 0, 0): 1, (1, 0, 1): -7, (0, 1, 1): -12},
    # C_1 = -4 x0 x1 + 9 x1^2 - 5 x0 x2 - 10 x1 x2
    {(1, 1, 0): -4, (0, 2, 0): 9, (1, 0, 1): -5, (0, 1, 1): -10},
    # C_2 = 6 x0 x1 - 14 x0 x2 + 10 x1 x2 + x2^2
    {(1, 1, 0): 6, (1, 0, 1): -14, (0, 1, 1): 10, (0, 0, 2): 1},
)

# C_i ∩ C_j，键为 (i, j)；每组第一个点是坐标点 e_k (k ∉ {i, j})
THREE_CONIC_INTERSECTIONS: Dict[Tuple[int, int], List[Tuple[int, int, int]]] = {
    (1, 2): [(1, 0, 0), (1, 10, -7), (1, 11, -1), (1, 5, 9)],
    (0, 2): [(0, 1, 0), (1, 5, 13), (1, 10, 8), (1, -1, -6)],
    (0, 1): [(0, 0, 1), (1, 6, -11), (1, -11, -13), (1, -4, 12)],
}

# 过十个平面的唯一三次型 x3 x4 x5
THREE_CONIC_CUBIC_EXPONENT = (0, 0, 0, 1, 1, 1)


# ==================== Winger 六次曲线 ====================

# 32x^6 + 27xy^5 - 120x^4yz + 150x^2y^2z^2 + 5y^3z^3 + 27xz^5
WINGER_TERMS: Dict[Tuple[int, int, int], int] = {
    (6, 0, 0): 32,
    (1, 5, 0): 27,
    (4, 1, 1): -120,
    (2, 2, 2): 150,
    (0, 3, 3): 5,
    (1, 0, 5): 27,
}

WINGER_PRIME_RANGE = (31, 499)
WINGER_SKIPPED_PRIMES = (2, 3, 5)
WINGER_EXTENSION_DEGREE = 2
WINGER_NODE_COUNT = 10


# ==================== Morin 构造 ====================

MORIN_DEFAULT_PRIME = 11
MORIN_PLANE_COUNT = 13


# ==================== 引用字符串 ====================

PLUMBING = "plumbing"

CITATIONS: Dict[str, str] = {
    "three_conic.conics": "three conics over F_29 and their twelve pairwise intersection points",
    "three_conic.verify": "three-conic ten: 45 incident pairs, 45 distinct points, Plücker span 10, isotropic",
    "three_conic.cubic": "unique cubic through the three-conic ten is x3*x4*x5",
    "three_conic.points": "cubics through the 45 intersection points form an 11-dimensional space",
    "three_conic.position": "position of the nine base-plane points: collinear triples, conic sextuples, cubics through them",
    "three_conic.product": "EPW sextic is not a combination of products of the 11 cubics",
    "three_conic.tangent": "rank of the 45x90 tangent system (recorded, not asserted)",
    "three_conic.dual": "dualizing by the annihilator preserves the incidence pattern",
    "three_conic.e_sets": "the nine points E^0, E^1, E^2 lie six on each conic",
    "coble.septic_dims": "septics with double points at the ten nodes form a 6-dimensional space",
    "coble.decimic_dims": "decimics with triple points at the ten nodes form a 6-dimensional space",
    "coble.node_dims": "per node: one cubic through the other nine, three quartics double at the node",
    "coble.septic_verify": "septic ten: 45 incident pairs, Lagrangian span",
    "coble.decimic_verify": "decimic ten: 45 incident pairs, Lagrangian span",
    "coble.quadric": "septic ten lies on a unique quadric Q and its EPW sextic is Q^3",
    "coble.cubic": "decimic ten lies on a unique cubic C and its EPW sextic is C^2",
    "coble.prime": "Winger sextic has exactly ten nodes over F_{p^2} at the selected prime",
    "coble.multiplicities": "every basis form of V has the required jets vanishing at the nodes",
    "coble.basis": "the product planes do not depend on the bases of the two factors",
    "coble.position": "position of the ten nodes: collinear triples, conic sextuples, cubics through them",
    "lattice.m10": "det(2I_11 + J_11) = 2^10 * 13",
    "lattice.m11": "2I_12 + J_12 has determinant 2^11 * 14 and cokernel (Z/2)^10 + Z/28",
    "lattice.embedding": "the embedding into I^{21,2} preserves all products of h^2 and the P_i",
    "lattice.complement": "complement generators have Gram determinant 2^10 * 13 up to sign",
    "lattice.bb": "|det| of the BB matrix is 2^11 * 13 against 2^11 for I^{1,10}(2)",
    "lattice.bb_text": "alternative stated value 2^11 * 3 * 13, reported alongside",
    "lattice.isotropic": "f_i^2 = 0, f_i.f_j = 1, sum f_i = 3 Delta, Delta^2 = 10",
    "lattice.fujiki": "Fujiki relation a^4 = 3 (a,a)^2 on basis vectors of the BB matrix",
    "lattice.roots": "E10 root basis of the orthogonal complement of k_10",
    "lattice.m0": "orthogonal complement of h^2 in the plane-class lattice",
    "morin.incidence": "13 planes, 78 incident pairs",
    "morin.span": "isotropic Plücker span of dimension exactly 10",
    "morin.sanity": "every pairwise intersection point lies in the base plane or on one of the quadrics",
    "epw.oracle": "corank >= 1 exactly where the EPW sextic vanishes",
    "epw.chart": "chart determinant equals x_c^4 times the sextic, charts agree up to scalar",
    "epw.singular": "the ten planes lie in the singular locus of the EPW sextic",
    "epw.theta": "decomposable vectors of A include the configured planes",
    "epw.plane_curve": "corank-2 locus inside a plane of the ten",
    "epw.dual": "the dual Lagrangian subspace has a degenerate EPW sextic exactly when the original does (recorded)",
    "algebra.singular_scan": "Fermat cubic has no singular point over the scanned fields (partial certificate)",
}
