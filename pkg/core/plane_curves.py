"""
平面曲线：带重数条件的三元型线性系统、Winger 六次曲线与 Coble 十平面

- forms_with_mult: 在指定点上有给定重数的 d 次型
- winger_sextic / find_nodes / select_winger_prime: 十个结点的有理六次曲线
- coble_septic_ten / coble_decimic_ten: 七次、十次线性系统中的十平面
"""

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Poly, primerange, symbols

from .algebra import linalg
from .algebra.fields import FieldSpec, ext_field, prime_field
from .algebra.polynomials import MultiPoly, monomials, upoly_gcd, upoly_roots, upoly_trim
from .algebra.projective import projective_points, projective_size
from .constants import (
    CITATIONS,
    DEFAULT_POINT_BUDGET,
    WINGER_EXTENSION_DEGREE,
    WINGER_NODE_COUNT,
    WINGER_PRIME_RANGE,
    WINGER_SKIPPED_PRIMES,
    WINGER_TERMS,
)
from .errors import BudgetExceededError, ConstructionError, DimensionError, FieldError, InconsistentSystemError
from .grassmann import Plane, random_invertible
from .hypersurfaces import FormSystem, system_from_conditions
from .log import logger
from .tens.models import Provenance, TenConfig

_X, _Y = symbols("x y")


# ==================== 带重数的点组 ====================

@dataclass(frozen=True)
class MultPointSet:
    """
    P² 中带重数的点组

    点按规范形式存储（第一个非零坐标为 1），互不相同。
    """
    field: FieldSpec
    points: Tuple[Tuple, ...]
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        pts = tuple(self.field.normalize(p) for p in self.points)
        mults = tuple(int(m) for m in self.multiplicities)
        if len(pts) != len(mults):
            raise DimensionError("one multiplicity per point", expected=len(pts), actual=len(mults))
        if any(len(p) != 3 or not any(p) for p in pts):
            raise DimensionError("points must be nonzero vectors of length 3")
        if any(m < 1 for m in mults):
            raise DimensionError("multiplicities must be positive", expected=">= 1", actual=min(mults))
        if len(set(pts)) != len(pts):
            raise DimensionError("points must be distinct", expected=len(pts), actual=len(set(pts)))
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "multiplicities", mults)

    @classmethod
    def uniform(cls, field: FieldSpec, points: Sequence[Sequence], m: int) -> "MultPointSet":
        return cls(field, tuple(tuple(p) for p in points), (m,) * len(points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(zip(self.points, self.multiplicities))

    def without(self, i: int) -> "MultPointSet":
        keep = [j for j in range(len(self)) if j != i]
        return MultPointSet(self.field, tuple(self.points[j] for j in keep),
                            tuple(self.multiplicities[j] for j in keep))

    def with_multiplicities(self, mults: Sequence[int]) -> "MultPointSet":
        return MultPointSet(self.field, self.points, tuple(mults))

    @property
    def condition_count(self) -> int:
        return sum(comb(m + 1, 2) for m in self.multiplicities)

    def over_prime_field(self) -> Optional["MultPointSet"]:
        """全部坐标落在素子域时返回素域上的同一点组，否则 None"""
        fld = self.field
        if fld.k == 1:
            return self
        if not all(fld.in_prime_subfield(x) for p in self.points for x in p):
            return None
        base = prime_field(fld.p)
        return MultPointSet(base, tuple(tuple(int(x) for x in p) for p in self.points), self.multiplicities)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "points": [[self.field.scalar_to_json(x) for x in p] for p in self.points],
            "multiplicities": list(self.multiplicities),
        }


# ==================== 重数条件 ====================

def _local_conditions(field: FieldSpec, point: Tuple, d: int, m: int) -> List[List]:
    """
    把 point 移到 (1,0,0) 后，f∘T 中 (y1,y2) 次数 < m 的系数作为线性条件

    T 的列为 point 与两个坐标向量：x_piv = y0，x_a = p_a·y0 + y1，x_b = p_b·y0 + y2，
    单项式 x^e 在 y0^{d-s-t}·y1^s·y2^t 上的系数是 C(e_a,s)·p_a^{e_a-s}·C(e_b,t)·p_b^{e_b-t}。
    """
    piv = next(i for i, x in enumerate(point) if x)
    a, b = [i for i in range(3) if i != piv]
    pa, pb = point[a], point[b]
    exps = monomials(3, d)
    rows = []
    for total in range(m):
        for s in range(total + 1):
            t = total - s
            row = []
            for e in exps:
                if e[a] < s or e[b] < t:
                    row.append(field.zero)
                    continue
                c = field.mul(field.from_int(comb(e[a], s) * comb(e[b], t)),
                              field.mul(field.pow(pa, e[a] - s), field.pow(pb, e[b] - t)))
                row.append(c)
            rows.append(row)
    return rows


def forms_with_mult(d: int, s: MultPointSet) -> FormSystem:
    """在每个 p_i 处重数 ≥ m_i 的三元 d 次型（每点 C(m_i+1, 2) 个条件）"""
    if d < 0:
        raise DimensionError("degree must be non-negative", expected=">= 0", actual=d)
    rows = []
    for pt, m in s:
        rows.extend(_local_conditions(s.field, pt, d, m))
    sys = system_from_conditions(s.field, 3, d, rows)
    logger.debug(f"🧮 {d} 次型, {len(s)} 个点（{s.condition_count} 个条件）: 维数 {sys.dimension}")
    return sys


def expected_mult_dimension(d: int, s: MultPointSet) -> int:
    return max(comb(d + 2, 2) - s.condition_count, 0)


def conditions_independent(sys: FormSystem, s: MultPointSet) -> bool:
    return sys.dimension == expected_mult_dimension(sys.degree, s)


def check_multiplicities(sys: FormSystem, s: MultPointSet) -> bool:
    """逐个求偏导独立复核：阶 < m_i 的全部偏导在 p_i 处为零"""
    for form in sys.basis:
        for pt, m in s:
            for order in range(m):
                for alpha in combinations_with_replacement(range(3), order):
                    g = form
                    for i in alpha:
                        g = g.partial(i)
                    if g.evaluate(pt):
                        return False
    return True


# ==================== Winger 六次曲线 ====================

def winger_sextic(field: FieldSpec) -> MultiPoly:
    return MultiPoly.from_ints(field, 3, WINGER_TERMS)


def _affine_poly(form: MultiPoly) -> Poly:
    """z = 1 上的去齐次化，系数取 [0, p) 中的整数代表"""
    rep: Dict[Tuple[int, int], int] = {}
    for (a, b, _), c in form.terms.items():
        rep[(a, b)] = rep.get((a, b), 0) + int(c)
    return Poly.from_dict(rep or {(0, 0): 0}, _X, _Y, domain="ZZ")


def _candidate_ys(grads: Sequence[MultiPoly], p: int) -> Optional[List[int]]:
    """
    两两偏导关于 x 的结式在 F_p 上的最大公因式（低次在前）

    全部结式模 p 为零时返回 None，调用方改为整体扫描。
    """
    affine = [_affine_poly(g) for g in grads]
    found = None
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if affine[i].is_zero or affine[j].is_zero:
            continue
        res = affine[i].resultant(affine[j])
        reduced = Poly(res.as_expr(), _Y, modulus=p)
        if reduced.is_zero:
            continue
        found = reduced if found is None else found.gcd(reduced)
    if found is None:
        return None
    return [int(c) % p for c in reversed(found.all_coeffs())]


def _univariate(form: MultiPoly, fld: FieldSpec, var: int, fixed: Dict[int, object]) -> List:
    """其余变量取定值后关于 x_var 的一元多项式（低次在前）"""
    coeffs = [fld.zero] * (form.d + 1)
    for exp, c in form.terms.items():
        term = c
        for i, e in enumerate(exp):
            if i != var and e:
                term = fld.mul(term, fld.pow(fixed[i], e))
        coeffs[exp[var]] = fld.add(coeffs[exp[var]], term)
    return coeffs


def _common_roots(forms: Sequence[MultiPoly], fld: FieldSpec, var: int, fixed: Dict[int, object]) -> List:
    g: List = []
    for form in forms:
        g = upoly_gcd(fld, g, _univariate(form, fld, var, fixed))
        if len(g) == 1:
            return []
    if not g:
        return list(fld.elements())
    return upoly_roots(fld, g)


def _scan_nodes(f: MultiPoly, grads: Sequence[MultiPoly], budget: int) -> List[Tuple]:
    size = projective_size(f.field.order, 2)
    if size > budget:
        raise BudgetExceededError("node scan", size, budget)
    return [pt for pt in projective_points(f.field, 2)
            if not any(g.evaluate(pt) for g in grads) and not f.evaluate(pt)]


def find_nodes(f: MultiPoly, max_degree: int = WINGER_EXTENSION_DEGREE, seed: int = 0,
               budget: int = DEFAULT_POINT_BUDGET) -> MultPointSet:
    """
    P²(F_{p^K}) 中 f 与三个偏导同时为零的点（以重数 2 记录）

    素域系数时先用 sympy 结式把 z = 1 上的候选 y 坐标缩到少数几个，
    再在每个纤维上求 x 的公共根；z = 0 这条直线单独处理。结式退化时整体扫描。
    """
    base = f.field
    if not base.is_finite:
        raise FieldError("node search needs a finite field")
    fld = ext_field(base.p, max_degree, seed) if base.k == 1 else base
    form = f if fld == base else f.map_coefficients(lambda c: base.embed(c, fld), fld)
    grads = form.gradient()
    equations = [form] + grads

    ys = _candidate_ys(f.gradient(), base.p) if base.k == 1 else None
    if ys is None:
        logger.debug(f"🔍 结式退化，整体扫描 P²(F_{fld.order})")
        nodes = _scan_nodes(form, grads, budget)
    else:
        nodes = []
        lifted = [base.embed(c, fld) for c in upoly_trim(ys)]
        for y0 in upoly_roots(fld, lifted):
            for x0 in _common_roots(equations, fld, 0, {1: y0, 2: fld.one}):
                nodes.append((x0, y0, fld.one))
        for t in _common_roots(equations, fld, 1, {0: fld.one, 2: fld.zero}):
            nodes.append((fld.one, t, fld.zero))
        infinity = (fld.zero, fld.one, fld.zero)
        if not any(e.evaluate(infinity) for e in equations):
            nodes.append(infinity)
    nodes = sorted(set(fld.normalize(p) for p in nodes))
    logger.debug(f"🔍 F_{fld.order} 上找到 {len(nodes)} 个奇点")
    return MultPointSet.uniform(fld, nodes, 2)


def select_winger_prime(lo: int = WINGER_PRIME_RANGE[0], hi: int = WINGER_PRIME_RANGE[1],
                        max_degree: int = WINGER_EXTENSION_DEGREE, seed: int = 0,
                        skip: Sequence[int] = WINGER_SKIPPED_PRIMES) -> Tuple[int, MultPointSet]:
    """
    按顺序扫描素数，返回第一个 Winger 曲线恰有十个结点的 (p, 结点)

    Raises:
        ConstructionError: 区间内没有合适的素数
    """
    for p in primerange(lo, hi + 1):
        if p in skip:
            continue
        nodes = find_nodes(winger_sextic(prime_field(p)), max_degree, seed)
        if len(nodes) == WINGER_NODE_COUNT:
            logger.info(f"✅ Winger 六次曲线在 p = {p} 时有 {WINGER_NODE_COUNT} 个结点（F_{p}^{max_degree}）")
            return p, nodes
        logger.debug(f"⚠️ p = {p}: {len(nodes)} 个奇点，跳过")
    raise ConstructionError(f"no prime in [{lo}, {hi}] gives {WINGER_NODE_COUNT} nodes", CITATIONS["coble.prime"])


# ==================== Coble 十平面 ====================

@dataclass(frozen=True)
class _CobleKind:
    name: str
    degree: int
    node_mult: int
    aux_degree: int
    aux_sigma_mult: int
    aux_node_mult: int
    fact: str


SEPTIC = _CobleKind("septic", 7, 2, 4, 1, 2, "coble.septic_dims")
DECIMIC = _CobleKind("decimic", 10, 3, 7, 2, 3, "coble.decimic_dims")
COBLE_KINDS = {"septic": SEPTIC, "decimic": DECIMIC}


@dataclass
class CobleData:
    """V 的基与每个结点处的两个因子系统"""
    kind: _CobleKind
    nodes: MultPointSet
    space: FormSystem
    cubics: List[FormSystem]
    aux: List[FormSystem]

    def node_dims(self) -> List[Tuple[int, int]]:
        return [(c.dimension, a.dimension) for c, a in zip(self.cubics, self.aux)]


def coble_data(nodes: MultPointSet, kind: str = "septic") -> CobleData:
    """
    计算 V 与全部 (三次, 辅助) 因子系统，并检查维数 6 / 1 / 3

    Raises:
        ConstructionError: 任一维数不符，fact 字段给出对应论断
    """
    spec = COBLE_KINDS[kind]
    if len(nodes) != WINGER_NODE_COUNT:
        raise ConstructionError(f"expected {WINGER_NODE_COUNT} nodes, got {len(nodes)}", CITATIONS[spec.fact])
    fld = nodes.field
    space = forms_with_mult(spec.degree, MultPointSet.uniform(fld, nodes.points, spec.node_mult))
    if space.dimension != 6:
        logger.error(f"❌ {spec.name}: V 的维数为 {space.dimension}")
        raise ConstructionError(f"{spec.name} space has dimension {space.dimension}, expected 6", CITATIONS[spec.fact])
    cubics, aux = [], []
    for i in range(len(nodes)):
        cubic = forms_with_mult(3, MultPointSet.uniform(fld, nodes.points, 1).without(i))
        mults = [spec.aux_sigma_mult] * len(nodes)
        mults[i] = spec.aux_node_mult
        factor = forms_with_mult(spec.aux_degree, nodes.with_multiplicities(mults))
        if cubic.dimension != 1 or factor.dimension != 3:
            raise ConstructionError(
                f"node {i}: cubic system dimension {cubic.dimension}, "
                f"degree-{spec.aux_degree} system dimension {factor.dimension} (expected 1 and 3)",
                CITATIONS["coble.node_dims"],
            )
        cubics.append(cubic)
        aux.append(factor)
    return CobleData(spec, nodes, space, cubics, aux)


def _product_plane(space: FormSystem, cubic: MultiPoly, factors: Sequence[MultiPoly]) -> Plane:
    """三个乘积 cubic·q 在 V 的基下的坐标张成的平面"""
    cols = linalg.transpose([b.to_vector() for b in space.basis])
    rows = []
    for q in factors:
        try:
            rows.append(tuple(linalg.solve_vector(space.field, cols, (cubic * q).to_vector())))
        except InconsistentSystemError as e:
            raise ConstructionError("product form does not lie in V", CITATIONS["coble.node_dims"]) from e
    return Plane(space.field, tuple(rows))


def coble_planes(data: CobleData, rng: Optional[random.Random] = None) -> List[Plane]:
    """
    十个乘积平面；给定 rng 时先对两个因子各做一次随机换基
    """
    planes = []
    fld = data.space.field
    for cubic_sys, aux_sys in zip(data.cubics, data.aux):
        cubic = cubic_sys.basis[0]
        factors = list(aux_sys.basis)
        if rng is not None:
            cubic = cubic.scale(fld.random_nonzero(rng))
            g = random_invertible(fld, 3, rng)
            mixed = []
            for row in g:
                acc = factors[0].scale(row[0])
                for j in (1, 2):
                    acc = acc + factors[j].scale(row[j])
                mixed.append(acc)
            factors = mixed
        planes.append(_product_plane(data.space, cubic, factors))
    return planes


def basis_independent(data: CobleData, seed: int = 0) -> bool:
    """换基重算后每个平面的规范形不变"""
    first = coble_planes(data)
    second = coble_planes(data, random.Random(f"coble-basis:{seed}"))
    return all(p.same_as(q) for p, q in zip(first, second))


def coble_ten(data: CobleData, prime: Optional[int] = None) -> TenConfig:
    """由已算好的因子系统组装十平面（provenance 记录结点与各结点处的维数）"""
    planes = coble_planes(data)
    nodes, kind = data.nodes, data.kind.name
    fld = nodes.field
    prov = Provenance(
        recipe=f"coble_{kind}",
        source=f"Winger sextic nodes over {fld!r}",
        extra={
            "prime": prime if prime is not None else fld.p,
            "node_field_degree": fld.k,
            "node_dims": [list(d) for d in data.node_dims()],
            "nodes": nodes.to_json()["points"],
        },
    )
    logger.info(f"✅ Coble {kind} 十平面构造完成（{fld!r}）")
    return TenConfig(fld, tuple(planes), prov)


def coble_septic_ten(nodes: MultPointSet, prime: Optional[int] = None) -> TenConfig:
    return coble_ten(coble_data(nodes, "septic"), prime)


def coble_decimic_ten(nodes: MultPointSet, prime: Optional[int] = None) -> TenConfig:
    return coble_ten(coble_data(nodes, "decimic"), prime)


def winger_nodes(prime: Optional[int] = None, max_degree: int = WINGER_EXTENSION_DEGREE,
                 seed: int = 0, prime_range: Tuple[int, int] = WINGER_PRIME_RANGE) -> Tuple[int, MultPointSet]:
    """
    给定素数（或在 prime_range 内选择）时的 Winger 结点；全部有理时落回素域

    Raises:
        ConstructionError: 给定素数上结点数不是 10
    """
    if prime is None:
        prime, nodes = select_winger_prime(prime_range[0], prime_range[1], max_degree=max_degree, seed=seed)
    else:
        nodes = find_nodes(winger_sextic(prime_field(prime)), max_degree, seed)
        if len(nodes) != WINGER_NODE_COUNT:
            raise ConstructionError(f"Winger sextic has {len(nodes)} singular points over F_{prime}^{max_degree}",
                                    CITATIONS["coble.prime"])
    return prime, nodes.over_prime_field() or nodes
