# modules/scalar.py - 精确系数运算模块（q^{1/2}, d^{1/2} 的 Laurent 多项式）

import re
import threading
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

from utils.logger import setup_logger

logger = setup_logger(__name__)

# (a, b) 表示 q^{a/2} d^{b/2}
Exponent = Tuple[int, int]
Number = Union[int, Fraction]


def _half(value) -> int:
    """把 q/d 单位的指数（可为半整数）转换为半单位整数"""
    doubled = Fraction(value) * 2
    if doubled.denominator != 1:
        raise ValueError(f"指数必须是半整数: {value}")
    return int(doubled)


class Scalar:
    """
    系数环元素：q^{1/2}, d^{1/2} 的 Laurent 多项式，系数为任意精度有理数

    terms 以 {(a, b): Fraction} 存储，a、b 分别为 q^{1/2}、d^{1/2} 的指数；
    零系数在构造时即被丢弃，因此判零即判空。实例不可变。
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Dict[Exponent, Number] = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[(int(key[0]), int(key[1]))] = Fraction(coeff)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar 不可修改")

    # ---------- 构造 ----------

    @classmethod
    def const(cls, value: Number) -> "Scalar":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, q=0, d=0, coeff: Number = 1) -> "Scalar":
        """
        构造单项式 coeff · q^q · d^d

        Args:
            q: q 的指数（允许半整数）
            d: d 的指数（允许半整数）
            coeff: 有理系数
        """
        return cls({(_half(q), _half(d)): coeff})

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"无法转换为 Scalar: {value!r}")

    # ---------- 查询 ----------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """单位元恰为系数可逆的单项式"""
        return self.is_monomial()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.const(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        # 常数与对应的 int/Fraction 相等，哈希也须一致
        if self._hash is None:
            if not self.terms:
                value = hash(0)
            elif set(self.terms) == {(0, 0)}:
                value = hash(self.terms[(0, 0)])
            else:
                value = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", value)
        return self._hash

    # ---------- 环运算 ----------

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        result = dict(self.terms)
        for key, coeff in other.terms.items():
            result[key] = result.get(key, 0) + coeff
        return Scalar(result)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Scalar({key: coeff * other for key, coeff in self.terms.items()})
        if not isinstance(other, Scalar):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        result: Dict[Exponent, Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                result[key] = result.get(key, 0) + c1 * c2
        return Scalar(result)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """单项式求逆；非单位元抛出 ValueError"""
        if not self.is_unit():
            raise ValueError(f"{self} 不是单位元，无法求逆")
        (a, b), coeff = next(iter(self.terms.items()))
        return Scalar({(-a, -b): 1 / coeff})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.is_monomial():
            (a, b), coeff = next(iter(self.terms.items()))
            return Scalar({(a * exponent, b * exponent): coeff ** exponent})
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ---------- 数值特化 ----------

    def specialize(self, q0: Number, d0: Number) -> Fraction:
        return specialize(self, q0, d0)

    # ---------- 文本形式 ----------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            coeff = self.terms[(a, b)]
            factors = [str(coeff)]
            if a:
                factors.append(f"q^{_render_exponent(a)}")
            if b:
                factors.append(f"d^{_render_exponent(b)}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """解析 __str__ 生成的文本形式"""
        text = text.strip()
        if text == "0":
            return ZERO
        result = {}
        for part in text.split(" + "):
            factors = part.strip().split("*")
            coeff = Fraction(factors[0])
            a = b = 0
            for factor in factors[1:]:
                match = _FACTOR_RE.fullmatch(factor)
                if not match:
                    raise ValueError(f"无法解析因子: {factor}")
                value = _parse_exponent(match.group(2))
                if match.group(1) == "q":
                    a += value
                else:
                    b += value
            result[(a, b)] = result.get((a, b), 0) + coeff
        return cls(result)


_FACTOR_RE = re.compile(r"([qd])\^(\{-?\d+/2\}|-?\d+)")


def _render_exponent(half_units: int) -> str:
    if half_units % 2 == 0:
        return str(half_units // 2)
    return "{" + f"{half_units}/2" + "}"


def _parse_exponent(text: str) -> int:
    if text.startswith("{"):
        return int(text[1:-1].split("/")[0])
    return 2 * int(text)


ZERO = Scalar()
ONE = Scalar.const(1)


def as_scalar(value) -> Scalar:
    return Scalar.coerce(value)


def q_pow(k) -> Scalar:
    return Scalar.monomial(q=k)


def d_pow(k) -> Scalar:
    return Scalar.monomial(d=k)


def qint(k: int) -> Scalar:
    """
    量子整数 [k] = (q^k - q^{-k}) / (q - q^{-1})

    Args:
        k: 整数

    Returns:
        q^{k-1} + q^{k-3} + ... + q^{1-k}（k < 0 时取相反数）
    """
    if k < 0:
        return -qint(-k)
    return Scalar({(2 * e, 0): 1 for e in range(k - 1, -k, -2)})


def derived_params(m: int, n: int) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
    """返回 (q1, q2, q3, zeta)，其中 q1 = d q^{-1}, q2 = q^2, q3 = d^{-1} q^{-1}, zeta = q1^{n-m}"""
    if m == n:
        raise ValueError("要求 m ≠ n")
    q1 = Scalar.monomial(q=-1, d=1)
    q2 = q_pow(2)
    q3 = Scalar.monomial(q=-1, d=-1)
    return q1, q2, q3, q1 ** (n - m)


# ---------- ψ 函数的级数展开 ----------

class SeriesTail:
    """
    惰性、带记忆的系数流

    第 k 项由 generator(k) 计算，首次读取后缓存；
    缓存的读写由锁保护，同一下标总是返回同一值。
    """

    def __init__(self, direction: str, generator):
        if direction not in ("+", "-"):
            raise ValueError(f"展开方向必须是 '+' 或 '-': {direction}")
        self.direction = direction
        self._generator = generator
        self._cache: Dict[int, Scalar] = {}
        self._lock = threading.Lock()

    def __getitem__(self, index: int) -> Scalar:
        if index < 0:
            raise IndexError(f"系数下标必须非负: {index}")
        with self._lock:
            cached = self._cache.get(index)
        if cached is not None:
            return cached
        value = self._generator(index)
        with self._lock:
            return self._cache.setdefault(index, value)

    def prefix(self, count: int) -> List[Scalar]:
        return [self[k] for k in range(count)]


_psi_cache: Dict[Tuple[int, str], SeriesTail] = {}
_psi_lock = threading.Lock()


def psi_series(r: int, direction: str) -> SeriesTail:
    """
    ψ_r(z) = (q^r - q^{-r} z) / (1 - z) 的展开

    '+' 为 z = ∞ 处展开（z^{-k} 的系数）：q^{-r}, q^{-r} - q^r, ...
    '-' 为 z = 0 处展开（z^k 的系数）：q^r, q^r - q^{-r}, ...
    """
    key = (r, direction)
    with _psi_lock:
        series = _psi_cache.get(key)
    if series is not None:
        return series

    lead = q_pow(-r) if direction == "+" else q_pow(r)
    tail = lead - (q_pow(r) if direction == "+" else q_pow(-r))

    def _coefficient(k: int) -> Scalar:
        return lead if k == 0 else tail

    series = SeriesTail(direction, _coefficient)
    logger.debug(f"psi_series 缓存未命中: r={r}, 方向 {direction}")
    with _psi_lock:
        return _psi_cache.setdefault(key, series)


def psi_coeffs(r: int, direction: str, count: int) -> List[Scalar]:
    if count < 0:
        raise ValueError(f"count 必须非负: {count}")
    return psi_series(r, direction).prefix(count)


def shift_factor(u: Scalar, r: int) -> Scalar:
    """平移自同构 A(z) ↦ A(uz) 在第 r 个模式上的乘子 u^{-r}"""
    return u ** (-r)


# ---------- 数值特化 ----------

def _rational_sqrt(value: Fraction) -> Fraction:
    from math import isqrt
    if value < 0:
        raise ValueError(f"负数没有有理平方根: {value}")
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        raise ValueError(f"{value} 不是有理数的平方，无法特化半整数次幂")
    return Fraction(num, den)


def _power(base: Fraction, half_units: int, root_cache: dict) -> Fraction:
    if half_units % 2 == 0:
        return base ** (half_units // 2)
    if base not in root_cache:
        root_cache[base] = _rational_sqrt(base)
    return root_cache[base] ** half_units


def specialize(x: Scalar, q0: Number, d0: Number) -> Fraction:
    """
    在 q = q0, d = d0 处求值（环同态）

    Args:
        x: 待求值的 Scalar
        q0: q 的有理取值，非零且 |q0| ≠ 1
        d0: d 的有理取值，非零
    """
    q0, d0 = Fraction(q0), Fraction(d0)
    if q0 == 0 or d0 == 0:
        raise ValueError("特化点 q0, d0 必须非零")
    if abs(q0) == 1:
        raise ValueError("|q0| = 1 不允许（q 不能是单位根）")
    roots: dict = {}
    total = Fraction(0)
    for (a, b), coeff in x.terms.items():
        total += coeff * _power(q0, a, roots) * _power(d0, b, roots)
    return total


def specialize_all(values: Iterable[Scalar], q0: Number, d0: Number) -> List[Fraction]:
    return [specialize(v, q0, d0) for v in values]
