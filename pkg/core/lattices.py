"""
整数格计算

- I^{1,10} 中的迷向十序列 f_i、Fano 类 Δ、典范相关类 k_10、E_10 根基
- 平面类格 M = 2I + 𝟙 及其嵌入 I^{21,2}、正交补
- BB 矩阵与 I^{1,10}(2) 的判别式比较、Fujiki 关系

格带有显式的对角环境基；(−1)、(2) 这类扭曲记为 Gram 上的整数倍数 scale。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra.smith import SmithForm, integer_det, smith_normal_form
from .errors import DimensionError
from .log import logger


IntRows = Tuple[Tuple[int, ...], ...]

# 文本中出现的另一个 det 数值，与 2^11·13 并列报告
STATED_ALTERNATIVE_BB_DET = 2 ** 11 * 3 * 13


def inertia(gram: Sequence[Sequence[int]]) -> Tuple[int, int, int]:
    """对称矩阵的惯性指数 (正, 负, 零)，有理数上做对称消元"""
    m = [[Fraction(x) for x in row] for row in gram]
    active = list(range(len(m)))
    pos = neg = 0
    while active:
        piv = next((i for i in active if m[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and m[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + e_j，使对角元变为 2 m_ij
            for k in range(len(m)):
                m[i][k] += m[j][k]
            for k in range(len(m)):
                m[k][i] += m[k][j]
            piv = i
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in active if k != piv]
        for k in rest:
            if m[k][piv]:
                f = m[k][piv] / d
                for l in rest:
                    m[k][l] -= f * m[piv][l]
        active = rest
    return pos, neg, len(active)


@dataclass(frozen=True)
class IntLattice:
    """
    整数格

    base_gram 为未扭曲的 Gram 矩阵，真实 Gram = scale · base_gram。
    给出 expected_signature 时构造期校验。
    """
    label: str
    base_gram: IntRows
    scale: int = 1
    basis_names: Tuple[str, ...] = ()
    expected_signature: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        g = self.base_gram
        n = len(g)
        if any(len(row) != n for row in g):
            raise DimensionError(f"Gram of {self.label} is not square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise DimensionError(f"Gram of {self.label} is not symmetric")
        if self.basis_names and len(self.basis_names) != n:
            raise DimensionError("basis names", expected=n, actual=len(self.basis_names))
        if self.expected_signature is not None:
            pos, neg, _ = self.inertia()
            if (pos, neg) != tuple(self.expected_signature):
                raise DimensionError(f"signature of {self.label}", expected=self.expected_signature,
                                     actual=(pos, neg))

    # ==================== 基本量 ====================

    @property
    def rank(self) -> int:
        return len(self.base_gram)

    @property
    def gram(self) -> List[List[int]]:
        return [[self.scale * x for x in row] for row in self.base_gram]

    def inertia(self) -> Tuple[int, int, int]:
        return inertia(self.gram)

    @property
    def signature(self) -> Tuple[int, int]:
        pos, neg, _ = self.inertia()
        return pos, neg

    def det(self) -> int:
        return integer_det(self.gram)

    def discriminant_group(self) -> SmithForm:
        """Gram 矩阵余核（Smith 标准形）"""
        return smith_normal_form(self.gram)

    def twist(self, k: int) -> "IntLattice":
        """L(k)：Gram 乘以 k"""
        sig = self.expected_signature
        if sig is not None and k < 0:
            sig = (sig[1], sig[0])
        return IntLattice(f"{self.label}({k})", self.base_gram, self.scale * k, self.basis_names, sig)

    # ==================== 向量 ====================

    def vector(self, coords: Sequence[int]) -> "LatticeVector":
        return LatticeVector(self, tuple(int(c) for c in coords))

    def basis_vector(self, i: int) -> "LatticeVector":
        return self.vector([1 if j == i else 0 for j in range(self.rank)])

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        g = self.base_gram
        total = 0
        for i, a in enumerate(u):
            if a:
                row = g[i]
                total += a * sum(row[j] * b for j, b in enumerate(v) if b)
        return self.scale * total

    def gram_of(self, vectors: Sequence["LatticeVector"]) -> List[List[int]]:
        return [[u.dot(v) for v in vectors] for u in vectors]

    def to_json(self) -> dict:
        return {"label": self.label, "gram": self.gram, "signature": list(self.signature)}


@dataclass(frozen=True)
class LatticeVector:
    """格中向量（相对于格的命名基的整数坐标）"""
    lattice: IntLattice
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.lattice.rank:
            raise DimensionError(f"vector in {self.lattice.label}", expected=self.lattice.rank,
                                 actual=len(self.coords))

    def dot(self, other: "LatticeVector") -> int:
        return self.lattice.dot(self.coords, other.coords)

    @property
    def square(self) -> int:
        return self.dot(self)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(self.lattice, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "LatticeVector":
        return LatticeVector(self.lattice, tuple(k * a for a in self.coords))


def direct_sum(label: str, *parts: IntLattice, expected_signature: Optional[Tuple[int, int]] = None) -> IntLattice:
    """正交直和（各分量的扭曲并入 Gram）"""
    n = sum(p.rank for p in parts)
    gram = [[0] * n for _ in range(n)]
    names: List[str] = []
    offset = 0
    for idx, part in enumerate(parts):
        g = part.gram
        for i in range(part.rank):
            for j in range(part.rank):
                gram[offset + i][offset + j] = g[i][j]
        suffix = "'" * idx
        names.extend(f"{nm}{suffix}" for nm in (part.basis_names or [f"b{i}" for i in range(part.rank)]))
        offset += part.rank
    return IntLattice(label, tuple(map(tuple, gram)), 1, tuple(names), expected_signature)


def concat(lattice: IntLattice, *blocks: Sequence[int]) -> LatticeVector:
    """按直和分量拼接坐标"""
    coords: List[int] = []
    for b in blocks:
        coords.extend(b)
    return lattice.vector(coords)


# ==================== I^{1,10} 与 Enriques 格数据 ====================

def i110() -> IntLattice:
    """I^{1,10} = diag(1, −1, ..., −1)，基 e_0..e_10"""
    gram = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(11)) for i in range(11))
    return IntLattice("I^{1,10}", gram, 1, tuple(f"e{i}" for i in range(11)), (1, 10))


def isotropic_ten(lattice: Optional[IntLattice] = None) -> List[LatticeVector]:
    """f_i = 3e_0 − Σ_{j≠i} e_j，i = 1..10"""
    lat = lattice or i110()
    out = []
    for i in range(1, 11):
        out.append(lat.vector([3] + [0 if j == i else -1 for j in range(1, 11)]))
    return out


def fano_class(lattice: Optional[IntLattice] = None) -> LatticeVector:
    """Δ = 10e_0 − 3Σe_i"""
    lat = lattice or i110()
    return lat.vector([10] + [-3] * 10)


def k10_class(lattice: Optional[IntLattice] = None) -> LatticeVector:
    """k_10 = −3e_0 + Σe_i"""
    lat = lattice or i110()
    return lat.vector([-3] + [1] * 10)


def enriques_root_basis(lattice: Optional[IntLattice] = None) -> List[LatticeVector]:
    """E_10 根基：α_0 = e_0 − e_1 − e_2 − e_3，α_i = e_i − e_{i+1}（i = 1..9）"""
    lat = lattice or i110()
    roots = [lat.vector([1, -1, -1, -1] + [0] * 7)]
    for i in range(1, 10):
        c = [0] * 11
        c[i], c[i + 1] = 1, -1
        roots.append(lat.vector(c))
    return roots


def isotropic_report() -> Dict:
    """f_i² = 0、f_i·f_j = 1、Σf_i = 3Δ、Δ² = 10、Δ·f_i = 3、Δ·k_10 = 0"""
    fs = isotropic_ten()
    delta = fano_class()
    total = fs[0]
    for f in fs[1:]:
        total = total + f
    squares = [f.square for f in fs]
    cross = [fs[i].dot(fs[j]) for i in range(10) for j in range(i + 1, 10)]
    return {
        "f_squares_zero": all(s == 0 for s in squares),
        "f_products_one": all(c == 1 for c in cross),
        "sum_is_3_delta": total.coords == (3 * delta).coords,
        "delta_square": delta.square,
        "delta_dot_f": sorted({delta.dot(f) for f in fs}),
        "delta_dot_k10": delta.dot(k10_class()),
    }


def e10_lattice() -> IntLattice:
    """根基 α_0..α_9 的 Gram（k_10 的正交补）"""
    roots = enriques_root_basis()
    gram = tuple(tuple(a.dot(b) for b in roots) for a in roots)
    return IntLattice("E10", gram, 1, tuple(f"alpha{i}" for i in range(10)), (1, 9))


def root_basis_report() -> Dict:
    roots = enriques_root_basis()
    k10 = k10_class()
    delta = fano_class()
    gram = [[a.dot(b) for b in roots] for a in roots]
    edges = sorted((i, j) for i in range(10) for j in range(i + 1, 10) if gram[i][j])
    return {
        "squares": sorted({r.square for r in roots}),
        "orthogonal_to_k10": all(r.dot(k10) == 0 for r in roots),
        "dynkin_edges": edges,
        "gram_det": integer_det(gram),
        "delta_products": [delta.dot(r) for r in roots],
    }


# ==================== 平面类格 M ====================

def plane_class_gram(n: int) -> IntLattice:
    """(h², P_1..P_n) 的 Gram = 2I_{n+1} + 𝟙_{n+1}"""
    if n < 1:
        raise DimensionError("plane count must be positive", expected=">= 1", actual=n)
    size = n + 1
    gram = tuple(tuple(3 if i == j else 1 for j in range(size)) for i in range(size))
    names = ("h2",) + tuple(f"P{i}" for i in range(1, n + 1))
    return IntLattice(f"M{n}", gram, 1, names, (size, 0))


def plane_class_det_formula(n: int) -> int:
    """det(2I_{n+1} + 𝟙) = 2^n · (n + 3)"""
    return 2 ** n * (n + 3)


def m0_sublattice(n: int = 10) -> Tuple[IntLattice, List["LatticeVector"]]:
    """M 中 h² 的正交补 M_0，基 h² − P_1 − P_2 − P_3、P_i − P_{i+1}；返回 (M_0, 基在 M 中的向量)"""
    m = plane_class_gram(n)
    size = n + 1
    basis = [[1, -1, -1, -1] + [0] * (size - 4)]
    for i in range(1, n):
        c = [0] * size
        c[i], c[i + 1] = 1, -1
        basis.append(c)
    vecs = [m.vector(b) for b in basis]
    gram = tuple(tuple(row) for row in m.gram_of(vecs))
    return IntLattice(f"M0_{n}", gram), vecs


def m0_report(n: int = 10) -> Dict:
    """
    det(M_0) = det(M) · idx² / (h²)²，idx = (h²)² / gcd(h²·M)
    """
    m = plane_class_gram(n)
    size = n + 1
    m0, vecs = m0_sublattice(n)
    h2 = m.basis_vector(0)
    g = 0
    for i in range(size):
        g = gcd(g, h2.dot(m.basis_vector(i)))
    index = h2.square // g
    det0 = m0.det()
    return {
        "rank": m0.rank,
        "orthogonal_to_h2": all(v.dot(h2) == 0 for v in vecs),
        "det": det0,
        "index": index,
        "det_formula_holds": det0 * h2.square == m.det() * index * index,
        "discriminant": m0.discriminant_group().describe(),
    }


# ==================== 嵌入 I^{21,2} 与正交补 ====================

@dataclass
class EmbeddingReport:
    """ι: M → I^{21,2} 的验证结果"""
    images: List[LatticeVector] = field(default_factory=list)
    product_mismatches: List[Tuple[int, int, int, int]] = field(default_factory=list)
    products_checked: int = 0
    complement: List[LatticeVector] = field(default_factory=list)
    complement_gram: List[List[int]] = field(default_factory=list)
    complement_det: int = 0
    orthogonality_zeros: int = 0
    orthogonality_checked: int = 0
    lemma_block: List[List[int]] = field(default_factory=list)

    @property
    def preserves_products(self) -> bool:
        return not self.product_mismatches

    @property
    def complement_orthogonal(self) -> bool:
        return self.orthogonality_zeros == self.orthogonality_checked

    def to_dict(self) -> Dict:
        return {
            "products_checked": self.products_checked,
            "product_mismatches": [list(m) for m in self.product_mismatches],
            "complement_gram": self.complement_gram,
            "complement_det": self.complement_det,
            "orthogonality_zeros": self.orthogonality_zeros,
            "orthogonality_checked": self.orthogonality_checked,
            "lemma_block": self.lemma_block,
        }


# 显示形式的块 [[2, 3], [3, −2]]，与计算值在一个生成元变号下一致
DISPLAYED_LEMMA_BLOCK = ((2, 3), (3, -2))


def i212() -> IntLattice:
    """I^{21,2} = I^{1,10}(−1) ⊕ I^{1,10}(−1) ⊕ ⟨1⟩"""
    one = IntLattice("<1>", ((1,),), 1, ("e",), (1, 0))
    return direct_sum("I^{21,2}", i110().twist(-1), i110().twist(-1), one, expected_signature=(21, 2))


def embed_and_complement() -> EmbeddingReport:
    """
    ι(h²) = (k_10, k_10′, e)，ι(P_i) = (e_i, e_i′, −e)

    逐对比较 66 个内积；正交补生成元 (e_i, −e_i′, 0)（i = 0..10）与 (Δ, e_0′, −3e)。
    """
    big = i212()
    m = plane_class_gram(10)
    base = i110()
    k10 = list(k10_class(base).coords)
    delta = list(fano_class(base).coords)

    def unit(i: int) -> List[int]:
        return [1 if j == i else 0 for j in range(11)]

    report = EmbeddingReport()
    report.images = [concat(big, k10, k10, [1])]
    report.images += [concat(big, unit(i), unit(i), [-1]) for i in range(1, 11)]

    gram_m = m.gram
    for a in range(11):
        for b in range(a, 11):
            report.products_checked += 1
            got = report.images[a].dot(report.images[b])
            if got != gram_m[a][b]:
                report.product_mismatches.append((a, b, gram_m[a][b], got))

    comp = [concat(big, unit(i), [-x for x in unit(i)], [0]) for i in range(11)]
    comp.append(concat(big, delta, unit(0), [-3]))
    report.complement = comp
    report.complement_gram = big.gram_of(comp)
    report.complement_det = integer_det(report.complement_gram)

    for u in comp:
        for v in report.images:
            report.orthogonality_checked += 1
            if u.dot(v) == 0:
                report.orthogonality_zeros += 1

    block_vecs = [concat(big, k10, [-x for x in k10], [0]), comp[-1]]
    report.lemma_block = big.gram_of(block_vecs)

    if report.product_mismatches:
        logger.error(f"❌ 嵌入内积不一致: {report.product_mismatches[:3]}")
    return report


def lemma_block_matches(block: Sequence[Sequence[int]]) -> bool:
    """与显示块在某个生成元变号下相同（对角元相同，非对角元绝对值相同）"""
    shown = DISPLAYED_LEMMA_BLOCK
    return (block[0][0] == shown[0][0] and block[1][1] == shown[1][1]
            and abs(block[0][1]) == abs(shown[0][1]) and block[0][1] == block[1][0])


# ==================== BB 矩阵 ====================

def bb_matrix() -> IntLattice:
    """对角 (6, −2, ..., −2)，首行首列其余元素为 2（基 σ, D_1..D_10）"""
    n = 11
    gram = [[0] * n for _ in range(n)]
    gram[0][0] = 6
    for i in range(1, n):
        gram[i][i] = -2
        gram[0][i] = gram[i][0] = 2
    names = ("sigma",) + tuple(f"D{i}" for i in range(1, n))
    return IntLattice("BB", tuple(map(tuple, gram)), 1, names)


def i110_twisted_by_two() -> IntLattice:
    """I^{1,10}(2) = diag(2, −2, ..., −2)"""
    return i110().twist(2)


def bb_discriminant_compare() -> Dict:
    """|det| 与 Smith 余核比较；行列式不同即不等距"""
    a = bb_matrix()
    ref = i110_twisted_by_two()
    det_a, det_ref = abs(a.det()), abs(ref.det())
    snf_a, snf_ref = a.discriminant_group(), ref.discriminant_group()
    return {
        "det_bb": det_a,
        "det_reference": det_ref,
        "smith_bb": list(snf_a.diagonal),
        "smith_reference": list(snf_ref.diagonal),
        "cokernel_bb": snf_a.describe(),
        "cokernel_reference": snf_ref.describe(),
        "cokernel_order_bb": snf_a.cokernel_order,
        "non_isometric": det_a != det_ref,
        "stated_alternative": STATED_ALTERNATIVE_BB_DET,
        "stated_alternative_matches": det_a == STATED_ALTERNATIVE_BB_DET,
        "signature_bb": list(a.signature),
    }


def fujiki_consistent(lattice: IntLattice, quartic_numbers: Dict[int, int], constant: int = 3) -> Dict[int, bool]:
    """对给定的基向量检查 a⁴ = constant · (a, a)²"""
    out = {}
    for i, value in quartic_numbers.items():
        q = lattice.basis_vector(i).square
        out[i] = value == constant * q * q
    return out


def bb_derivations(h4: int = 12, constant: int = 3) -> Dict:
    """
    由 h⁴ = 12 和 Fujiki 常数 3 推出 (h, h) = 2；从 BB 矩阵读出 (σ,σ)、(σ,D)、(D,D)
    """
    ratio = Fraction(h4, constant)
    hh = None
    root = isqrt(ratio.numerator) if ratio >= 0 else -1
    if ratio.denominator == 1 and root * root == ratio:
        hh = root
    a = bb_matrix()
    gram = a.gram
    quartics = {i: constant * gram[i][i] ** 2 for i in range(a.rank)}
    return {
        "h_square": hh,
        "sigma_square": gram[0][0],
        "sigma_dot_D": gram[0][1],
        "D_square": gram[1][1],
        "fujiki_on_basis": all(fujiki_consistent(a, quartics, constant).values()),
    }
