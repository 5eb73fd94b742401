"""
标量域：素域 F_p、扩域 F_{p^k}、有理数域 Q

元素表示：
- 有理数域：fractions.Fraction
- 素域：[0, p) 内的整数
- 扩域：系数向量按 p 进制打包成整数 c_0 + c_1 p + ... + c_{k-1} p^{k-1}，
  模一个存储的首一不可约多项式；乘法查对数表，求逆走扩展欧几里得

所有域对象构造后不可变，可安全地在任意模块间共享。
"""

import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

import sympy.polys.galoistools as gf
from sympy import factorint, isprime
from sympy.polys.domains import ZZ

from ..constants import LOG_TABLE_LIMIT, MIN_POLY_SEARCH_BUDGET, RATIONAL_SAMPLE_RANGE
from ..errors import FieldError
from ..log import logger


class FieldSpec:
    """
    域描述基类

    子类实现标量运算；行运算 row_axpy / scale_row 供消元使用，
    按域类型各自给出最快的写法。
    """

    p: int = 0
    k: int = 1

    # ==================== 基本信息 ====================

    @property
    def order(self) -> Optional[int]:
        """域的元素个数（有理数域为 None）"""
        return None

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    # ==================== 运算（子类实现）====================

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def coerce(self, x):
        """把 int / Fraction 转成本域元素（扩域中 int 视为常数）"""
        if isinstance(x, Fraction):
            return self.div(self.from_int(x.numerator), self.from_int(x.denominator))
        return self.from_int(int(x))

    # ==================== 行运算 ====================

    def row_axpy(self, row: List, factor, src: Sequence, start: int = 0) -> None:
        """row[j] -= factor * src[j]，j >= start（原地）"""
        if not factor:
            return
        for j in range(start, len(row)):
            s = src[j]
            if s:
                row[j] = self.sub(row[j], self.mul(factor, s))

    def scale_row(self, row: List, c, start: int = 0) -> None:
        for j in range(start, len(row)):
            if row[j]:
                row[j] = self.mul(row[j], c)

    def dot(self, u: Sequence, v: Sequence):
        acc = self.zero
        for a, b in zip(u, v):
            if a and b:
                acc = self.add(acc, self.mul(a, b))
        return acc

    # ==================== 随机与枚举 ====================

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def random_nonzero(self, rng: random.Random):
        while True:
            a = self.random_element(rng)
            if a:
                return a

    def elements(self) -> Iterator:
        raise FieldError("rational field cannot be enumerated")

    # ==================== 射影辅助 ====================

    def normalize(self, vec: Sequence) -> Tuple:
        """缩放使第一个非零坐标为 1；零向量原样返回"""
        for a in vec:
            if a:
                c = self.inv(a)
                return tuple(self.mul(x, c) if x else self.zero for x in vec)
        return tuple(vec)

    # ==================== 序列化 ====================

    def to_json(self) -> dict:
        raise NotImplementedError

    def scalar_to_json(self, a):
        raise NotImplementedError

    def scalar_from_json(self, obj):
        raise NotImplementedError

    def embed(self, a, target: "FieldSpec"):
        """把本域元素嵌入 target（仅支持 Q→F_p 约化、素域→同特征扩域）"""
        if target == self:
            return a
        raise FieldError(f"no embedding from {self!r} into {target!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __hash__(self) -> int:
        return hash((self.p, self.k, tuple(self.to_json().get("min_poly", ()))))


class RationalField(FieldSpec):
    """有理数域 Q（Fraction，任意精度）"""

    p = 0
    k = 1

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def coerce(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def row_axpy(self, row, factor, src, start=0):
        if not factor:
            return
        for j in range(start, len(row)):
            s = src[j]
            if s:
                row[j] = row[j] - factor * s

    def random_element(self, rng):
        r = RATIONAL_SAMPLE_RANGE
        return Fraction(rng.randint(-r, r), rng.randint(1, 10))

    def to_json(self) -> dict:
        return {"p": 0, "k": 1}

    def scalar_to_json(self, a):
        a = Fraction(a)
        return {"num": str(a.numerator), "den": str(a.denominator)}

    def scalar_from_json(self, obj):
        if isinstance(obj, dict):
            return Fraction(int(obj["num"]), int(obj["den"]))
        return Fraction(obj)

    def embed(self, a, target):
        if target == self:
            return a
        if target.is_finite:
            a = Fraction(a)
            if a.denominator % target.p == 0:
                raise FieldError(f"{a} has denominator divisible by {target.p}")
            return target.coerce(a)
        return super().embed(a, target)

    def __repr__(self) -> str:
        return "Q"


class PrimeField(FieldSpec):
    """素域 F_p，元素为 [0, p) 内的整数"""

    def __init__(self, p: int):
        if not isprime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.k = 1

    @property
    def order(self) -> int:
        return self.p

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if not a % self.p:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        return pow(a, e, self.p)

    def row_axpy(self, row, factor, src, start=0):
        if not factor:
            return
        p = self.p
        for j in range(start, len(row)):
            s = src[j]
            if s:
                row[j] = (row[j] - factor * s) % p

    def scale_row(self, row, c, start=0):
        p = self.p
        for j in range(start, len(row)):
            row[j] = row[j] * c % p

    def dot(self, u, v):
        return sum(a * b for a, b in zip(u, v)) % self.p

    def random_element(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def is_square(self, a) -> bool:
        if not a or self.p == 2:
            return True
        return pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a) -> Optional[int]:
        return _tonelli_shanks(self, a)

    def frobenius(self, a):
        return a

    def to_coeffs(self, a) -> List[int]:
        return [a]

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        return coeffs[0] % self.p if coeffs else 0

    def to_json(self) -> dict:
        return {"p": self.p, "k": 1}

    def scalar_to_json(self, a):
        return [a]

    def scalar_from_json(self, obj):
        if isinstance(obj, list):
            return obj[0] % self.p if obj else 0
        return int(obj) % self.p

    def embed(self, a, target):
        if target == self:
            return a
        if isinstance(target, ExtensionField) and target.p == self.p:
            return a
        return super().embed(a, target)

    def __repr__(self) -> str:
        return f"F_{self.p}"


class ExtensionField(FieldSpec):
    """
    扩域 F_{p^k}

    min_poly 为首一不可约多项式的系数，低次在前（长度 k+1，末项为 1）。
    构造时校验不可约性：k <= 3 检查无根，否则用 x^{p^d} - x 的 gcd 判别。
    """

    def __init__(self, p: int, k: int, min_poly: Sequence[int], verify: bool = True):
        if not isprime(p):
            raise FieldError(f"{p} is not prime")
        if k < 2:
            raise FieldError("extension degree must be at least 2")
        coeffs = [int(c) % p for c in min_poly]
        if len(coeffs) != k + 1 or coeffs[-1] != 1:
            raise FieldError(f"minimal polynomial must be monic of degree {k}: {list(min_poly)}")
        self.p = p
        self.k = k
        self.min_poly: Tuple[int, ...] = tuple(coeffs)
        self._modulus = [ZZ(c) for c in reversed(coeffs)]
        if verify and not is_irreducible(coeffs, p):
            raise FieldError(f"minimal polynomial {coeffs} is reducible over F_{p}")
        self._q = p ** k
        self._exp: Optional[List[int]] = None
        self._log: Optional[List[int]] = None
        if self._q <= LOG_TABLE_LIMIT:
            self._build_tables()

    # ==================== 表示转换 ====================

    @property
    def order(self) -> int:
        return self._q

    def to_coeffs(self, a: int) -> List[int]:
        out = []
        for _ in range(self.k):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        value = 0
        for c in reversed(list(coeffs)[: self.k]):
            value = value * self.p + (int(c) % self.p)
        return value

    def _to_gf(self, a: int) -> list:
        return gf.gf_strip([ZZ(c) for c in reversed(self.to_coeffs(a))])

    def _from_gf(self, poly: list) -> int:
        return self.from_coeffs([int(c) for c in reversed(poly)])

    def _slow_mul(self, a: int, b: int) -> int:
        prod = gf.gf_mul(self._to_gf(a), self._to_gf(b), self.p, ZZ)
        return self._from_gf(gf.gf_rem(prod, self._modulus, self.p, ZZ))

    def _slow_pow(self, a: int, e: int) -> int:
        return self._from_gf(gf.gf_pow_mod(self._to_gf(a), e, self._modulus, self.p, ZZ))

    def _build_tables(self) -> None:
        """找本原元并建立指数/对数表"""
        group = self._q - 1
        factors = list(factorint(group))
        for g in range(2, self._q):
            if all(self._slow_pow(g, group // r) != 1 for r in factors):
                break
        else:
            raise FieldError(f"no primitive element found in F_{self.p}^{self.k}")
        exp = [0] * (2 * group)
        log = [0] * self._q
        x = 1
        for i in range(group):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        exp[group:] = exp[:group]
        self._exp = exp
        self._log = log
        logger.debug(f"🧮 F_{self.p}^{self.k} 对数表已建立 (本原元 {g})")

    # ==================== 运算 ====================

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        p = self.p
        if self.k == 2:
            a1, a0 = divmod(a, p)
            b1, b0 = divmod(b, p)
            return (a0 + b0) % p + ((a1 + b1) % p) * p
        res, place = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            res += ((da + db) % p) * place
            place *= p
        return res

    def sub(self, a, b):
        p = self.p
        if self.k == 2:
            a1, a0 = divmod(a, p)
            b1, b0 = divmod(b, p)
            return (a0 - b0) % p + ((a1 - b1) % p) * p
        res, place = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            res += ((da - db) % p) * place
            place *= p
        return res

    def neg(self, a):
        return self.sub(0, a)

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        s, _, h = gf.gf_gcdex(self._to_gf(a), self._modulus, self.p, ZZ)
        if h != [ZZ(1)]:
            raise FieldError(f"element {a} is not invertible modulo {self.min_poly}")
        return self._from_gf(s)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if not a:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self._q - 1)]
        return self._slow_pow(a, e)

    def row_axpy(self, row, factor, src, start=0):
        if not factor:
            return
        if self._exp is None:
            return super().row_axpy(row, factor, src, start)
        exp, log, sub = self._exp, self._log, self.sub
        lf = log[factor]
        for j in range(start, len(row)):
            s = src[j]
            if s:
                row[j] = sub(row[j], exp[lf + log[s]])

    def random_element(self, rng):
        return rng.randrange(self._q)

    def random_nonzero(self, rng):
        return rng.randrange(1, self._q)

    def elements(self) -> Iterator[int]:
        return iter(range(self._q))

    def frobenius(self, a):
        return self.pow(a, self.p)

    def in_prime_subfield(self, a) -> bool:
        return a < self.p

    def is_square(self, a) -> bool:
        if not a or self.p == 2:
            return True
        return self.pow(a, (self._q - 1) // 2) == 1

    def sqrt(self, a) -> Optional[int]:
        return _tonelli_shanks(self, a)

    # ==================== 序列化 ====================

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "min_poly": list(self.min_poly)}

    def scalar_to_json(self, a):
        return self.to_coeffs(a)

    def scalar_from_json(self, obj):
        if isinstance(obj, list):
            return self.from_coeffs(obj)
        return self.from_int(int(obj))

    def __repr__(self) -> str:
        return f"F_{self.p}^{self.k}"


# ==================== 工厂函数 ====================

RATIONALS = RationalField()


def _tonelli_shanks(field: FieldSpec, a) -> Optional[int]:
    """F_q 中的平方根；非平方元返回 None"""
    if not a:
        return 0
    q = field.order
    if field.p == 2:
        return field.pow(a, q // 2)
    if not field.is_square(a):
        return None
    # q - 1 = s * 2^e
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    # 二次非剩余（按打包整数顺序找第一个）
    z = 2
    while field.is_square(z):
        z += 1
    x = field.pow(a, (s + 1) // 2)
    b = field.pow(a, s)
    g = field.pow(z, s)
    r = e
    while b != 1:
        t, m = b, 0
        while t != 1:
            t = field.mul(t, t)
            m += 1
        gs = field.pow(g, 1 << (r - m - 1))
        x = field.mul(x, gs)
        g = field.mul(gs, gs)
        b = field.mul(b, g)
        r = m
    return x


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """
    判断 F_p 上的多项式是否不可约（系数低次在前）

    次数 <= 3：没有根即不可约；
    更高次数：对 d = 1..k/2 检查 gcd(f, x^{p^d} - x) = 1。
    """
    f = gf.gf_strip([ZZ(int(c) % p) for c in reversed(coeffs)])
    k = gf.gf_degree(f)
    if k <= 0:
        return False
    if k == 1:
        return True
    if k <= 3:
        return all(gf.gf_eval(f, ZZ(x), p, ZZ) != 0 for x in range(p))
    x_poly = [ZZ(1), ZZ(0)]
    h = x_poly
    for _ in range(k // 2):
        h = gf.gf_pow_mod(h, p, f, p, ZZ)
        g = gf.gf_gcd(f, gf.gf_sub(h, x_poly, p, ZZ), p, ZZ)
        if g != [ZZ(1)]:
            return False
    return True


@lru_cache(maxsize=None)
def ext_field(p: int, k: int = 1, seed: int = 0) -> FieldSpec:
    """
    构造 F_{p^k}，极小多项式由种子随机搜索得到

    Args:
        p: 素数特征
        k: 扩张次数 (k=1 时返回素域)
        seed: 搜索种子，同样的 (p, k, seed) 得到同样的域

    Raises:
        FieldError: p 非素数，或搜索预算耗尽
    """
    if not isprime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be positive, got {k}")
    if k == 1:
        return PrimeField(p)
    rng = random.Random(f"{p}:{k}:{seed}")
    for attempt in range(MIN_POLY_SEARCH_BUDGET):
        coeffs = [rng.randrange(p) for _ in range(k)] + [1]
        if coeffs[0] == 0:
            continue
        if is_irreducible(coeffs, p):
            logger.debug(f"🧮 F_{p}^{k} 极小多项式 {coeffs}（第 {attempt + 1} 次尝试）")
            return ExtensionField(p, k, coeffs, verify=False)
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p} found")


def prime_field(p: int) -> PrimeField:
    return ext_field(p, 1)


def field_from_json(obj: dict) -> FieldSpec:
    """按 {"p", "k", "min_poly"} 还原域"""
    p = int(obj.get("p", 0))
    k = int(obj.get("k", 1))
    if p == 0:
        return RATIONALS
    if k == 1:
        return prime_field(p)
    return ExtensionField(p, k, obj["min_poly"])


def extend_for_size(field: FieldSpec, min_size: int, seed: int = 0) -> FieldSpec:
    """返回阶数不小于 min_size 的域；素域按需扩张，其余原样返回"""
    if not field.is_finite or field.order >= min_size:
        return field
    if field.k != 1:
        raise FieldError(f"cannot extend non-prime field {field!r}")
    k = 2
    while field.p ** k < min_size:
        k += 1
    return ext_field(field.p, k, seed)
