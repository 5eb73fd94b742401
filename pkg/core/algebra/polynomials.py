"""
齐次多元多项式 MultiPoly 与一元多项式辅助函数

单项式序：分次字典序，x_0 > x_1 > ... > x_{n-1}，全项目统一。
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import DimensionError, DivisionError
from .fields import FieldSpec, PrimeField
from .linalg import rank

Exponent = Tuple[int, ...]


# ==================== 单项式 ====================

@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> Tuple[Exponent, ...]:
    """n 个变量的全部 d 次单项式，按分次字典序从大到小"""
    exps = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        exps.append(tuple(e))
    return tuple(sorted(exps, reverse=True))


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> Dict[Exponent, int]:
    return {e: i for i, e in enumerate(monomials(n, d))}


def monomial_values(field: FieldSpec, exps: Sequence[Exponent], point: Sequence) -> List:
    """所有单项式在一点的取值（插值矩阵的一行）"""
    if not exps:
        return []
    d = max(sum(e) for e in exps)
    n = len(point)
    if isinstance(field, PrimeField):
        p = field.p
        pw = []
        for x in point:
            row = [1] * (d + 1)
            for e in range(1, d + 1):
                row[e] = row[e - 1] * x % p
            pw.append(row)
        out = []
        for exp in exps:
            t = 1
            for i in range(n):
                if exp[i]:
                    t = t * pw[i][exp[i]]
            out.append(t % p)
        return out
    pw = []
    for x in point:
        row = [field.one] * (d + 1)
        for e in range(1, d + 1):
            row[e] = field.mul(row[e - 1], x)
        pw.append(row)
    out = []
    for exp in exps:
        t = field.one
        for i in range(n):
            if exp[i]:
                t = field.mul(t, pw[i][exp[i]])
        out.append(t)
    return out


def _mul_terms(field: FieldSpec, a: Dict[Exponent, object], b: Dict[Exponent, object]) -> Dict[Exponent, object]:
    out: Dict[Exponent, object] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = field.mul(ca, cb)
            if e in out:
                out[e] = field.add(out[e], v)
            else:
                out[e] = v
    return {e: c for e, c in out.items() if c}


# ==================== MultiPoly ====================

@dataclass(frozen=True)
class MultiPoly:
    """
    n 元 d 次齐次多项式

    terms: 指数向量 -> 非零系数；每个指数向量之和恰为 d
    """
    field: FieldSpec
    n: int
    d: int
    terms: Dict[Exponent, object] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exp, c in self.terms.items():
            exp = tuple(exp)
            if len(exp) != self.n or sum(exp) != self.d or min(exp, default=0) < 0:
                raise DimensionError(f"exponent {exp} does not belong to degree {self.d} in {self.n} variables")
            if c:
                clean[exp] = c
        object.__setattr__(self, "terms", clean)

    # ==================== 构造 ====================

    @classmethod
    def zero(cls, field: FieldSpec, n: int, d: int) -> "MultiPoly":
        return cls(field, n, d, {})

    @classmethod
    def from_ints(cls, field: FieldSpec, n: int, terms: Dict[Exponent, object]) -> "MultiPoly":
        """从 {指数: int/Fraction} 构造（系数经 field.coerce 约化）"""
        d = sum(next(iter(terms))) if terms else 0
        return cls(field, n, d, {tuple(e): field.coerce(c) for e, c in terms.items()})

    @classmethod
    def variable(cls, field: FieldSpec, n: int, i: int) -> "MultiPoly":
        exp = tuple(1 if j == i else 0 for j in range(n))
        return cls(field, n, 1, {exp: field.one})

    @classmethod
    def from_vector(cls, field: FieldSpec, n: int, d: int, vec: Sequence) -> "MultiPoly":
        exps = monomials(n, d)
        if len(vec) != len(exps):
            raise DimensionError("coefficient vector length", expected=len(exps), actual=len(vec))
        return cls(field, n, d, {e: c for e, c in zip(exps, vec) if c})

    # ==================== 基本性质 ====================

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exp: Sequence[int]):
        return self.terms.get(tuple(exp), self.field.zero)

    def to_vector(self) -> List:
        return [self.terms.get(e, self.field.zero) for e in monomials(self.n, self.d)]

    def leading_exponent(self) -> Optional[Exponent]:
        return max(self.terms) if self.terms else None

    def variables_used(self) -> List[int]:
        return sorted({i for e in self.terms for i, x in enumerate(e) if x})

    # ==================== 运算 ====================

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.n != other.n or self.d != other.d:
            raise DimensionError("incompatible forms", expected=(self.n, self.d), actual=(other.n, other.d))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = f.add(out[e], c) if e in out else c
        return MultiPoly(f, self.n, self.d, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.field, self.n, self.d, {e: self.field.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def scale(self, c) -> "MultiPoly":
        if not c:
            return MultiPoly.zero(self.field, self.n, self.d)
        return MultiPoly(self.field, self.n, self.d, {e: self.field.mul(x, c) for e, x in self.terms.items()})

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if self.n != other.n:
            raise DimensionError("variable count mismatch", expected=self.n, actual=other.n)
        return MultiPoly(self.field, self.n, self.d + other.d, _mul_terms(self.field, self.terms, other.terms))

    def power(self, e: int) -> "MultiPoly":
        result = MultiPoly(self.field, self.n, 0, {(0,) * self.n: self.field.one})
        for _ in range(e):
            result = result * self
        return result

    def evaluate(self, point: Sequence):
        f = self.field
        if isinstance(f, PrimeField):
            p = f.p
            acc = 0
            for exp, c in self.terms.items():
                t = c
                for x, e in zip(point, exp):
                    if e:
                        t = t * pow(x, e, p)
                acc += t
            return acc % p
        acc = f.zero
        for exp, c in self.terms.items():
            t = c
            for x, e in zip(point, exp):
                if e:
                    t = f.mul(t, f.pow(x, e))
            acc = f.add(acc, t)
        return acc

    def partial(self, i: int) -> "MultiPoly":
        """对 x_i 求偏导（特征 p 下系数可能消失）"""
        f = self.field
        out = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                v = f.mul(c, f.from_int(exp[i]))
                if v:
                    out[tuple(e)] = v
        return MultiPoly(f, self.n, max(self.d - 1, 0), out)

    def gradient(self) -> List["MultiPoly"]:
        return [self.partial(i) for i in range(self.n)]

    def compose_rows(self, rows: Sequence[Sequence]) -> "MultiPoly":
        """
        代入 x = Σ_j s_j · rows[j]（rows 为 m×n），得到 m 元 d 次型

        用于把 P^{n-1} 中的型限制到由 rows 张成的线性子空间上。
        """
        f = self.field
        m = len(rows)
        if any(len(r) != self.n for r in rows):
            raise DimensionError("substitution rows must have n entries", expected=self.n)
        units = [tuple(1 if j == k else 0 for j in range(m)) for k in range(m)]
        linear = [{units[j]: rows[j][i] for j in range(m) if rows[j][i]} for i in range(self.n)]
        powers: Dict[Tuple[int, int], Dict] = {}

        def lin_power(i: int, e: int) -> Dict:
            key = (i, e)
            if key not in powers:
                if e == 0:
                    powers[key] = {(0,) * m: f.one}
                else:
                    powers[key] = _mul_terms(f, lin_power(i, e - 1), linear[i])
            return powers[key]

        out: Dict[Exponent, object] = {}
        for exp, c in self.terms.items():
            acc = {(0,) * m: c}
            for i, e in enumerate(exp):
                if e:
                    acc = _mul_terms(f, acc, lin_power(i, e))
                    if not acc:
                        break
            for e, v in acc.items():
                out[e] = f.add(out[e], v) if e in out else v
        return MultiPoly(f, m, self.d, out)

    def divide_exact(self, g: "MultiPoly") -> "MultiPoly":
        """
        精确除以单项式 g（例如 x_c^4）

        Raises:
            DivisionError: 存在不能被整除的项，residual 记录该项
        """
        if len(g.terms) != 1 or g.n != self.n:
            raise DivisionError("divisor must be a single monomial in the same variables")
        (gexp, gc), = g.terms.items()
        f = self.field
        ginv = f.inv(gc)
        out = {}
        for exp, c in self.terms.items():
            q = tuple(a - b for a, b in zip(exp, gexp))
            if min(q) < 0:
                raise DivisionError("non-exact division", residual=(exp, c))
            out[q] = f.mul(c, ginv)
        quotient = MultiPoly(f, self.n, self.d - g.d, out)
        if quotient * g != self:
            raise DivisionError("quotient times divisor does not reproduce the dividend")
        return quotient

    def normalize(self) -> Tuple["MultiPoly", object]:
        """首个非零系数（单项式序）化为 1；返回 (规范形, 原系数)"""
        if not self.terms:
            return self, self.field.zero
        lead = self.terms[max(self.terms)]
        return self.scale(self.field.inv(lead)), lead

    def proportional_to(self, other: "MultiPoly") -> Optional[object]:
        """若 self = λ·other (λ ≠ 0) 返回 λ，否则 None"""
        if self.n != other.n or self.d != other.d or set(self.terms) != set(other.terms) or not self.terms:
            return None
        e0 = max(self.terms)
        lam = self.field.div(self.terms[e0], other.terms[e0])
        for e, c in other.terms.items():
            if self.field.mul(lam, c) != self.terms[e]:
                return None
        return lam

    def map_coefficients(self, fn: Callable, target: FieldSpec) -> "MultiPoly":
        return MultiPoly(target, self.n, self.d, {e: fn(c) for e, c in self.terms.items()})

    # ==================== 序列化 ====================

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "field": self.field.to_json(),
            "terms": [{"exp": list(e), "c": self.field.scalar_to_json(self.terms[e])}
                      for e in sorted(self.terms, reverse=True)],
        }

    @classmethod
    def from_json(cls, field: FieldSpec, obj: dict) -> "MultiPoly":
        terms = {tuple(t["exp"]): field.scalar_from_json(t["c"]) for t in obj.get("terms", [])}
        return cls(field, int(obj["n"]), int(obj["d"]), terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i}^{x}" if x > 1 else f"x{i}" for i, x in enumerate(e) if x)
            parts.append(f"{self.field.scalar_to_json(self.terms[e])}{'*' + mono if mono else ''}")
        return " + ".join(parts)


# ==================== 一元多项式（系数低次在前）====================

def upoly_trim(f: List) -> List:
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def upoly_eval(field: FieldSpec, f: Sequence, x):
    acc = field.zero
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def upoly_divmod(field: FieldSpec, f: Sequence, g: Sequence) -> Tuple[List, List]:
    f = upoly_trim(f)
    g = upoly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = field.inv(g[-1])
    q = [field.zero] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    while len(r) >= len(g) and r:
        shift = len(r) - len(g)
        c = field.mul(r[-1], inv)
        q[shift] = c
        for i, gc in enumerate(g):
            if gc:
                r[shift + i] = field.sub(r[shift + i], field.mul(c, gc))
        r = upoly_trim(r)
    return q, r


def upoly_monic(field: FieldSpec, f: Sequence) -> List:
    f = upoly_trim(f)
    if not f:
        return f
    inv = field.inv(f[-1])
    return [field.mul(c, inv) for c in f]


def upoly_gcd(field: FieldSpec, f: Sequence, g: Sequence) -> List:
    a, b = upoly_trim(f), upoly_trim(g)
    while b:
        _, r = upoly_divmod(field, a, b)
        a, b = b, r
    return upoly_monic(field, a)


def upoly_roots(field: FieldSpec, f: Sequence) -> List:
    """有限域中的全部不同根（一次、二次用公式，其余穷举）"""
    f = upoly_trim(f)
    if len(f) <= 1:
        return []
    if len(f) == 2:
        return [field.neg(field.div(f[0], f[1]))]
    if len(f) == 3 and field.p != 2:
        a, b, c = f[2], f[1], f[0]
        disc = field.sub(field.mul(b, b), field.mul(field.from_int(4), field.mul(a, c)))
        s = field.sqrt(disc)
        if s is None:
            return []
        two_a = field.mul(field.from_int(2), a)
        roots = {field.div(field.sub(s, b), two_a), field.div(field.sub(field.neg(s), b), two_a)}
        return sorted(roots)
    return [x for x in field.elements() if not upoly_eval(field, f, x)]


def forms_span_contains(field: FieldSpec, basis: Iterable[MultiPoly], target: MultiPoly) -> bool:
    """target 是否落在 basis 张成的空间中（系数向量秩比较）"""
    rows = [b.to_vector() for b in basis]
    r0 = rank(field, rows) if rows else 0
    return rank(field, rows + [target.to_vector()]) == r0
