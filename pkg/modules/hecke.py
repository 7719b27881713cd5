# modules/hecke.py - 双仿射 Hecke 代数正规形引擎

import random
import re
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

try:
    from config import MAX_DAHA_ELL
except ImportError:
    import sys
    from pathlib import Path
    project_root = Path(__file__).resolve().parents[1]
    if str(project_root) not in sys.path:
        sys.path.insert(0, str(project_root))
    from config import MAX_DAHA_ELL

from modules.scalar import ONE, ZERO, Scalar, as_scalar, q_pow
from utils.logger import setup_logger

logger = setup_logger(__name__)

Q2 = q_pow(2)
Q2_MINUS_1 = Q2 - 1
QM2 = q_pow(-2)
QM2_MINUS_1 = QM2 - 1


# ==========================================================================
# 仿射置换（窗口记号）
# ==========================================================================

@dataclass(frozen=True)
class AffinePermutation:
    """
    仿射置换 w: ℤ → ℤ，满足 w(i+ℓ) = w(i)+ℓ 且 Σ(w(i) - i) = 0

    以窗口 (w(1), ..., w(ℓ)) 存储。
    """
    window: Tuple[int, ...]

    @classmethod
    def identity(cls, ell: int) -> "AffinePermutation":
        return cls(tuple(range(1, ell + 1)))

    @property
    def ell(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        ell = self.ell
        base, offset = divmod(i - 1, ell)
        return self.window[offset] + base * ell

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.ell + 1))

    def validate(self):
        ell = self.ell
        if len({x % ell for x in self.window}) != ell:
            raise ValueError(f"窗口元素模 ℓ 必须互不相同: {self.window}")
        if sum(self.window) != ell * (ell + 1) // 2:
            raise ValueError(f"窗口和不满足规范化条件: {self.window}")

    def times_simple(self, i: int) -> "AffinePermutation":
        """w·s_i（i ∈ 0..ℓ-1），交换位置 i 与 i+1 上的值"""
        ell = self.ell
        w = list(self.window)
        if i == 0:
            first, last = w[0], w[-1]
            w[0], w[-1] = last - ell, first + ell
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return AffinePermutation(tuple(w))

    def has_right_descent(self, i: int) -> bool:
        return self(i) > self(i + 1)

    def length(self) -> int:
        """Σ_{1≤a<b≤ℓ} |⌊(w(b) - w(a)) / ℓ⌋|"""
        ell, w = self.ell, self.window
        return sum(abs((w[b] - w[a]) // ell) for a in range(ell) for b in range(a + 1, ell))

    def reduced_word(self) -> Tuple[int, ...]:
        """按最小右下降下标扫描得到的约化字"""
        if self.ell == 1:
            return ()
        letters = []
        current = self
        while not current.is_identity():
            i = next(i for i in range(self.ell) if current.has_right_descent(i))
            letters.append(i)
            current = current.times_simple(i)
        return tuple(reversed(letters))

    def conjugate_down(self) -> "AffinePermutation":
        """π^{-1} w π：对应 Q^{-1} T_w Q，s_i ↦ s_{i-1}"""
        ell, w = self.ell, self.window
        return AffinePermutation(tuple(x - 1 for x in w[1:]) + (w[0] + ell - 1,))

    def conjugate_up(self) -> "AffinePermutation":
        """π w π^{-1}：对应 Q T_w Q^{-1}，s_i ↦ s_{i+1}"""
        ell, w = self.ell, self.window
        return AffinePermutation((w[-1] - ell + 1,) + tuple(x + 1 for x in w[:-1]))

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.window) + "]"


# ==========================================================================
# 生成元字
# ==========================================================================

Token = Tuple[str, int, int]  # (字母, 下标, 指数)
_TOKEN_RE = re.compile(r"([TXYQ])(\d*)(?:\^(-?\d+))?")


@dataclass(frozen=True)
class GeneratorWord:
    """由 T_i^{±1}, X_j^{±1}, Y_j^{±1}, Q^{±1} 组成的字，从左到右依次右乘"""
    tokens: Tuple[Token, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "GeneratorWord":
        """解析 'T1 T2^-1 X1 Q^-1' 形式的字"""
        tokens = []
        for chunk in text.split():
            match = _TOKEN_RE.fullmatch(chunk)
            if not match:
                raise ValueError(f"无法解析生成元: {chunk}")
            letter, index, exp = match.groups()
            if letter != "Q" and not index:
                raise ValueError(f"生成元缺少下标: {chunk}")
            exp = int(exp) if exp else 1
            index = int(index) if index else 0
            tokens.extend([(letter, index, 1 if exp > 0 else -1)] * abs(exp))
        return cls(tuple(tokens))

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord(tuple((a, i, -e) for a, i, e in reversed(self.tokens)))

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.tokens + other.tokens)

    def __len__(self):
        return len(self.tokens)

    def __str__(self):
        parts = []
        for letter, index, exp in self.tokens:
            name = letter if letter == "Q" else f"{letter}{index}"
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return " ".join(parts) if parts else "1"


def word(*tokens: Token) -> GeneratorWord:
    return GeneratorWord(tuple(tokens))


def T(i: int, e: int = 1) -> GeneratorWord:
    return word(("T", i, e))


def X(j: int, e: int = 1) -> GeneratorWord:
    return word(("X", j, e))


def Y(j: int, e: int = 1) -> GeneratorWord:
    return word(("Y", j, e))


def Qw(e: int = 1) -> GeneratorWord:
    return word(("Q", 0, e))


def composite(kind: str, ell: int, *params: int) -> GeneratorWord:
    """
    复合元素的生成元字

    Args:
        kind: T_range_up (T_{i,j}) / T_range_down (T_{j,i}) / Qij (X_i T_{i,j}) / Pr
        ell: ℓ
        params: (i, j) 或 (r,)

    Returns:
        对应的 GeneratorWord
    """
    if kind in ("T_range_up", "T_range_down", "Qij"):
        i, j = params
        if not 1 <= i <= j < ell:
            raise ValueError(f"要求 1 ≤ i ≤ j < ℓ: i={i}, j={j}, ℓ={ell}")
        up = GeneratorWord(tuple(("T", k, 1) for k in range(i, j + 1)))
        if kind == "T_range_up":
            return up
        if kind == "T_range_down":
            return GeneratorWord(tuple(("T", k, 1) for k in range(j, i - 1, -1)))
        return X(i) + up
    if kind == "Pr":
        (r,) = params
        if not 1 <= r < ell:
            raise ValueError(f"要求 1 ≤ r < ℓ: r={r}, ℓ={ell}")
        result = GeneratorWord()
        for k in range(ell - r, 0, -1):
            result = result + composite("Qij", ell, k, k + r - 1)
        return result
    raise ValueError(f"未知的复合类型: {kind}")


# ==========================================================================
# 双仿射 Hecke 代数
# ==========================================================================

BasisKey = Tuple[int, AffinePermutation, Tuple[int, ...]]  # (k, w', μ)


def bernstein_correction(mu: Sequence[int], i: int) -> Dict[Tuple[int, ...], Scalar]:
    """
    Y^μ T_i = T_i Y^{s_iμ} + C(μ) 中的修正项 C(μ)

    (q²-1)(Y^μ - Y^{s_iμ})/(1 - Y_{i+1}Y_i^{-1}) 展开为有限的望远镜和，返回 {ν: 系数}。
    """
    a, b = mu[i - 1], mu[i]
    if a == b:
        return {}
    lo, hi, sign = (b, a, ONE) if a > b else (a, b, -ONE)
    result = {}
    for t in range(lo, hi):
        nu = list(mu)
        nu[i - 1], nu[i] = a + b - t, t
        result[tuple(nu)] = sign * Q2_MINUS_1
    return result


class DahaElement:
    """
    Ḧ_ℓ 的元素：基 Q^k T_{w'} Y^μ 的有限 Scalar 线性组合

    不可变；零系数被丢弃，因此相等即支撑与系数相等。
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "DoubleAffineHecke", terms: Dict[BasisKey, Scalar] = None):
        self.algebra = algebra
        self.terms: Dict[BasisKey, Scalar] = {k: v for k, v in (terms or {}).items() if v}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, DahaElement):
            return self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self.terms == (self.algebra.one() * as_scalar(other)).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "DahaElement") -> "DahaElement":
        result = dict(self.terms)
        for key, coeff in other.terms.items():
            result[key] = result.get(key, ZERO) + coeff
        return DahaElement(self.algebra, result)

    def __neg__(self):
        return DahaElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "DahaElement") -> "DahaElement":
        return self + (-other)

    def scale(self, c) -> "DahaElement":
        c = as_scalar(c)
        if not c:
            return DahaElement(self.algebra)
        return DahaElement(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GeneratorWord):
            return self.algebra.apply_word(self, other)
        if isinstance(other, DahaElement):
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def sorted_items(self) -> List[Tuple[BasisKey, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1].window, kv[0][2]))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) * {render_basis(key)}" for key, c in self.sorted_items())

    def __repr__(self):
        return f"DahaElement({self})"


def render_basis(key: BasisKey) -> str:
    k, w, mu = key
    return f"Q^{k} * T{w} * Y^({','.join(str(x) for x in mu)})"


class DoubleAffineHecke:
    """
    双仿射 Hecke 代数 Ḧ_ℓ（参数 q 与中心元 ζ）

    所有运算都是对正规形基 Q^k T_{w'} Y^μ 的右乘；T 的右乘按基元素缓存。
    """

    def __init__(self, ell: int, zeta: Scalar):
        if ell < 1:
            raise ValueError(f"ℓ 必须为正整数: {ell}")
        if not zeta.is_unit():
            raise ValueError(f"ζ 必须是单项式: {zeta}")
        self.ell = ell
        self.zeta = zeta
        self.zeta_inv = zeta.inverse()
        self._identity = AffinePermutation.identity(ell)
        self._t_cache: Dict[Tuple[BasisKey, int], Dict[BasisKey, Scalar]] = {}
        self._coset_cache: Dict[Tuple, Dict[BasisKey, Scalar]] = {}
        self._lock = threading.Lock()

    # ---------- 构造 ----------

    def one(self) -> DahaElement:
        return self.basis()

    def zero(self) -> DahaElement:
        return DahaElement(self)

    def basis(self, k: int = 0, window: Sequence[int] = None, mu: Sequence[int] = None,
              coeff=ONE) -> DahaElement:
        w = AffinePermutation(tuple(window)) if window is not None else self._identity
        if w.ell != self.ell:
            raise ValueError(f"窗口长度必须为 ℓ={self.ell}")
        w.validate()
        mu = tuple(mu) if mu is not None else (0,) * self.ell
        if len(mu) != self.ell:
            raise ValueError(f"μ 的长度必须为 ℓ={self.ell}")
        return DahaElement(self, {(k, w, mu): as_scalar(coeff)})

    def element(self, w: GeneratorWord) -> DahaElement:
        return self.apply_word(self.one(), w)

    # ---------- 下标检查 ----------

    def _check_t(self, i: int):
        if not 0 <= i < self.ell or (i == 0 and self.ell < 2):
            raise IndexError(f"T 的下标超出范围: i={i}, ℓ={self.ell}")

    def _check_j(self, j: int):
        if not 1 <= j <= self.ell:
            raise IndexError(f"X/Y 的下标超出范围: j={j}, ℓ={self.ell}")

    # ---------- T ----------

    def _t_on_basis(self, key: BasisKey, i: int) -> Dict[BasisKey, Scalar]:
        cache_key = (key, i)
        with self._lock:
            cached = self._t_cache.get(cache_key)
        if cached is not None:
            return cached

        k, w, mu = key
        a, b = mu[i - 1], mu[i]
        swapped = list(mu)
        swapped[i - 1], swapped[i] = b, a
        swapped = tuple(swapped)
        result: Dict[BasisKey, Scalar] = {}

        def _add(target: BasisKey, coeff: Scalar):
            result[target] = result.get(target, ZERO) + coeff

        # T_w T_i：长度增加则直接合并，否则用二次关系
        ws = w.times_simple(i)
        if w(i) < w(i + 1):
            _add((k, ws, swapped), ONE)
        else:
            _add((k, ws, swapped), Q2)
            _add((k, w, swapped), Q2_MINUS_1)

        for nu, c in bernstein_correction(mu, i).items():
            _add((k, w, nu), c)

        result = {key_: c for key_, c in result.items() if c}
        with self._lock:
            return self._t_cache.setdefault(cache_key, result)

    # ---------- 陪集正规形 ----------

    def coset_reduce(self, e: DahaElement, chars: Tuple[Tuple[int, Scalar], ...]) -> DahaElement:
        """
        e 在 Ḧ_ℓ ⊗_{H_J} χ 中的标准代表元

        chars = ((p, χ_p), ...) 给出关系 e·T_p ≡ χ_p·e（p ∈ J）。
        T_p Y^μ = Y^{s_pμ} T_p - C(s_pμ) 把 w' 在 J 上的右下降逐个移出，
        结果中每个基元素的 w' 都是 W/W_J 的最短代表元，因此相等即代表元相等。
        """
        if not chars:
            return e
        result: Dict[BasisKey, Scalar] = {}
        for key, coeff in e.terms.items():
            for target, c in self._coset_basis(key, chars).items():
                result[target] = result.get(target, ZERO) + coeff * c
        return DahaElement(self, result)

    def _coset_basis(self, key: BasisKey, chars: Tuple[Tuple[int, Scalar], ...]) -> Dict[BasisKey, Scalar]:
        cache_key = (key, chars)
        with self._lock:
            cached = self._coset_cache.get(cache_key)
        if cached is not None:
            return cached

        k, w, mu = key
        descent = next(((p, chi) for p, chi in chars if w.has_right_descent(p)), None)
        if descent is None:
            result = {key: ONE}
        else:
            p, chi = descent
            u = w.times_simple(p)
            swapped = list(mu)
            swapped[p - 1], swapped[p] = mu[p], mu[p - 1]
            swapped = tuple(swapped)
            partial: Dict[BasisKey, Scalar] = {(k, u, swapped): as_scalar(chi)}
            for nu, c in bernstein_correction(swapped, p).items():
                partial[(k, u, nu)] = partial.get((k, u, nu), ZERO) - c
            result = {}
            for sub, c in partial.items():
                if not c:
                    continue
                for target, c2 in self._coset_basis(sub, chars).items():
                    result[target] = result.get(target, ZERO) + c * c2
            result = {t: c for t, c in result.items() if c}
        with self._lock:
            return self._coset_cache.setdefault(cache_key, result)

    def right_mul_T(self, e: DahaElement, i: int, exp: int = 1) -> DahaElement:
        """
        e · T_i^{exp}

        i = 0 时按 T_0 = Q^{-1} T_1 Q 计算。
        """
        self._check_t(i)
        if exp not in (1, -1):
            raise ValueError(f"指数必须为 ±1: {exp}")
        if i == 0:
            return self.apply_word(e, Qw(-1) + T(1, exp) + Qw(1))
        result: Dict[BasisKey, Scalar] = {}
        for key, coeff in e.terms.items():
            for target, c in self._t_on_basis(key, i).items():
                result[target] = result.get(target, ZERO) + coeff * c
        product = DahaElement(self, result)
        if exp == 1:
            return product
        # T^{-1} = q^{-2} T + (q^{-2} - 1)
        return product.scale(QM2) + e.scale(QM2_MINUS_1)

    # ---------- Y ----------

    def right_mul_Y(self, e: DahaElement, j: int, exp: int = 1) -> DahaElement:
        self._check_j(j)
        shift = [0] * self.ell
        shift[j - 1] = exp
        return self.right_mul_Y_monomial(e, tuple(shift))

    def right_mul_Y_monomial(self, e: DahaElement, nu: Sequence[int]) -> DahaElement:
        """右乘 Y^ν（Y 互相交换且位于最右端，直接合并指数）"""
        result: Dict[BasisKey, Scalar] = {}
        for (k, w, mu), coeff in e.terms.items():
            target = (k, w, tuple(x + y for x, y in zip(mu, nu)))
            result[target] = result.get(target, ZERO) + coeff
        return DahaElement(self, result)

    def right_mul_Y_laurent(self, e: DahaElement, laurent: Dict[Tuple[int, ...], Scalar]) -> DahaElement:
        """右乘 Y 的 Laurent 多项式 {ν: 系数}"""
        result: Dict[BasisKey, Scalar] = {}
        for nu, c in laurent.items():
            for (k, w, mu), coeff in e.terms.items():
                target = (k, w, tuple(x + y for x, y in zip(mu, nu)))
                result[target] = result.get(target, ZERO) + coeff * c
        return DahaElement(self, result)

    # ---------- Q ----------

    def right_mul_Q(self, e: DahaElement, exp: int = 1) -> DahaElement:
        """
        e · Q^{exp}

        Y^μ Q = Q ζ^{-μ_1} Y^{(μ_2,...,μ_ℓ,μ_1)}，T_w Q = Q T_{π^{-1}wπ}；Q^{-1} 方向对称。
        """
        if exp not in (1, -1):
            raise ValueError(f"指数必须为 ±1: {exp}")
        result: Dict[BasisKey, Scalar] = {}
        for (k, w, mu), coeff in e.terms.items():
            if exp == 1:
                target = (k + 1, w.conjugate_down(), mu[1:] + mu[:1])
                factor = self.zeta ** (-mu[0]) if mu[0] else ONE
            else:
                target = (k - 1, w.conjugate_up(), mu[-1:] + mu[:-1])
                factor = self.zeta ** mu[-1] if mu[-1] else ONE
            result[target] = result.get(target, ZERO) + coeff * factor
        return DahaElement(self, result)

    # ---------- X ----------

    def x_word(self, j: int, exp: int = 1) -> Tuple[Scalar, GeneratorWord]:
        """
        X_j^{±1} 的 (标量, Q/T 字)

        X_j = q^{-2(j-1)} T_{j-1}⋯T_1 Q T_{ℓ-1}^{-1}⋯T_j^{-1}
        X_j^{-1} = q^{2(j-1)} T_j⋯T_{ℓ-1} Q^{-1} T_1^{-1}⋯T_{j-1}^{-1}
        """
        self._check_j(j)
        ell = self.ell
        if exp == 1:
            tokens = [("T", k, 1) for k in range(j - 1, 0, -1)]
            tokens.append(("Q", 0, 1))
            tokens += [("T", k, -1) for k in range(ell - 1, j - 1, -1)]
            return q_pow(-2 * (j - 1)), GeneratorWord(tuple(tokens))
        if exp == -1:
            tokens = [("T", k, 1) for k in range(j, ell)]
            tokens.append(("Q", 0, -1))
            tokens += [("T", k, -1) for k in range(1, j)]
            return q_pow(2 * (j - 1)), GeneratorWord(tuple(tokens))
        raise ValueError(f"指数必须为 ±1: {exp}")

    def right_mul_X(self, e: DahaElement, j: int, exp: int = 1) -> DahaElement:
        scalar, w = self.x_word(j, exp)
        return self.apply_word(e, w).scale(scalar)

    # ---------- 字与乘法 ----------

    def apply_token(self, e: DahaElement, token: Token) -> DahaElement:
        letter, index, exp = token
        if letter == "T":
            return self.right_mul_T(e, index, exp)
        if letter == "Y":
            return self.right_mul_Y(e, index, exp)
        if letter == "X":
            return self.right_mul_X(e, index, exp)
        if letter == "Q":
            return self.right_mul_Q(e, exp)
        raise ValueError(f"未知生成元: {letter}")

    def apply_word(self, e: DahaElement, w: GeneratorWord) -> DahaElement:
        for token in w.tokens:
            e = self.apply_token(e, token)
        return e

    def basis_word(self, key: BasisKey) -> GeneratorWord:
        """基元素 Q^k T_{w'} Y^μ 对应的生成元字（T_0 以 Q^{-1}T_1Q 实现）"""
        k, w, mu = key
        tokens: List[Token] = [("Q", 0, 1 if k > 0 else -1)] * abs(k)
        tokens += [("T", i, 1) for i in w.reduced_word()]
        for j, m in enumerate(mu, start=1):
            tokens += [("Y", j, 1 if m > 0 else -1)] * abs(m)
        return GeneratorWord(tuple(tokens))

    def multiply(self, e: DahaElement, f: DahaElement) -> DahaElement:
        result = self.zero()
        for key, coeff in f.sorted_items():
            result = result + self.apply_word(e, self.basis_word(key)).scale(coeff)
        return result


# ==========================================================================
# 测试元素组
# ==========================================================================

def affine_permutations_up_to(ell: int, max_length: int) -> List[AffinePermutation]:
    """长度不超过 max_length 的全部仿射置换（按长度、窗口排序）"""
    identity = AffinePermutation.identity(ell)
    if ell == 1:
        return [identity]
    seen = {identity}
    layer = [identity]
    for _ in range(max_length):
        nxt = []
        for w in layer:
            for i in range(ell):
                if w(i) < w(i + 1):
                    v = w.times_simple(i)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        layer = nxt
    return sorted(seen, key=lambda w: (w.length(), w.window))


def default_battery(algebra: DoubleAffineHecke) -> List[DahaElement]:
    """{1} ∪ {Q^{±1}} ∪ {T_{w'}: ℓ(w') ≤ 2} ∪ {Y^μ: |μ|₁ ≤ 2}"""
    ell = algebra.ell
    elements = [algebra.one(), algebra.basis(k=1), algebra.basis(k=-1)]
    for w in affine_permutations_up_to(ell, 2):
        if not w.is_identity():
            elements.append(algebra.basis(window=w.window))
    for mu in _small_exponents(ell, 2):
        if any(mu):
            elements.append(algebra.basis(mu=mu))
    return elements


def _small_exponents(ell: int, bound: int) -> List[Tuple[int, ...]]:
    results = [()]
    for _ in range(ell):
        results = [r + (x,) for r in results for x in range(-bound, bound + 1)]
    return sorted((r for r in results if sum(abs(x) for x in r) <= bound),
                  key=lambda r: (sum(abs(x) for x in r), r))


def random_word(ell: int, rng: random.Random, length: int) -> GeneratorWord:
    letters: List[Token] = []
    for _ in range(length):
        choices = ["Q", "Y", "X"] + (["T"] if ell > 1 else [])
        letter = rng.choice(choices)
        exp = rng.choice((1, -1))
        if letter == "Q":
            letters.append(("Q", 0, exp))
        elif letter == "T":
            letters.append(("T", rng.randint(1, ell - 1), exp))
        else:
            letters.append((letter, rng.randint(1, ell), exp))
    return GeneratorWord(tuple(letters))


def random_battery(algebra: DoubleAffineHecke, seed: int, count: int, max_length: int = 4) -> List[DahaElement]:
    rng = random.Random(seed)
    return [algebra.element(random_word(algebra.ell, rng, rng.randint(1, max_length)))
            for _ in range(count)]


# ==========================================================================
# 关系检查
# ==========================================================================

Side = List[Tuple[Scalar, GeneratorWord]]


@dataclass(frozen=True)
class WordRelation:
    """lhs = rhs，两侧均为 Σ 系数·字，作用方式为右乘"""
    name: str
    params: Tuple[int, ...]
    lhs: Tuple[Tuple[Scalar, GeneratorWord], ...]
    rhs: Tuple[Tuple[Scalar, GeneratorWord], ...]

    def sides(self, algebra: DoubleAffineHecke, w: DahaElement) -> Tuple[DahaElement, DahaElement]:
        return _side(algebra, w, self.lhs), _side(algebra, w, self.rhs)


def _side(algebra: DoubleAffineHecke, w: DahaElement, side) -> DahaElement:
    total = algebra.zero()
    for coeff, gw in side:
        total = total + algebra.apply_word(w, gw).scale(coeff)
    return total


def _rel(name: str, params, lhs: Side, rhs: Side) -> WordRelation:
    return WordRelation(name, tuple(params), tuple(lhs), tuple(rhs))


def _prod(*words: GeneratorWord) -> GeneratorWord:
    result = GeneratorWord()
    for w in words:
        result = result + w
    return result


def daha_relations(ell: int, zeta: Scalar) -> List[WordRelation]:
    """双仿射 Hecke 代数的全部定义关系、Q 表示下的关系、Q_{i,j}/P_r 引理与 Ψ 交换恒等式"""
    one = GeneratorWord()
    rels: List[WordRelation] = []
    x0 = _prod(*(X(j) for j in range(1, ell + 1)))

    for i in range(1, ell):
        rels.append(_rel("T-inverse", (i,), [(ONE, T(i) + T(i, -1))], [(ONE, one)]))
        rels.append(_rel("T-inverse-left", (i,), [(ONE, T(i, -1) + T(i))], [(ONE, one)]))
        rels.append(_rel("T-quadratic", (i,), [(ONE, T(i) + T(i))], [(Q2_MINUS_1, T(i)), (Q2, one)]))
        rels.append(_rel("TXT", (i,), [(ONE, _prod(T(i), X(i), T(i)))], [(Q2, X(i + 1))]))
        rels.append(_rel("TYT", (i,), [(ONE, _prod(T(i, -1), Y(i), T(i, -1)))], [(QM2, Y(i + 1))]))
        for j in range(1, ell + 1):
            if j not in (i, i + 1):
                rels.append(_rel("XT-commute", (j, i), [(ONE, X(j) + T(i))], [(ONE, T(i) + X(j))]))
                rels.append(_rel("YT-commute", (j, i), [(ONE, Y(j) + T(i))], [(ONE, T(i) + Y(j))]))
    for i in range(1, ell - 1):
        rels.append(_rel("T-braid", (i,), [(ONE, _prod(T(i), T(i + 1), T(i)))],
                         [(ONE, _prod(T(i + 1), T(i), T(i + 1)))]))
    for i in range(1, ell):
        for j in range(i + 2, ell):
            rels.append(_rel("T-far-commute", (i, j), [(ONE, T(i) + T(j))], [(ONE, T(j) + T(i))]))

    rels.append(_rel("X0Y1", (), [(ONE, x0 + Y(1))], [(zeta, Y(1) + x0)]))
    for i in range(1, ell + 1):
        rels.append(_rel("X-inverse", (i,), [(ONE, X(i) + X(i, -1))], [(ONE, one)]))
        rels.append(_rel("X-inverse-left", (i,), [(ONE, X(i, -1) + X(i))], [(ONE, one)]))
        rels.append(_rel("Y-inverse", (i,), [(ONE, Y(i) + Y(i, -1))], [(ONE, one)]))
        for j in range(i + 1, ell + 1):
            rels.append(_rel("X-commute", (i, j), [(ONE, X(i) + X(j))], [(ONE, X(j) + X(i))]))
            rels.append(_rel("Y-commute", (i, j), [(ONE, Y(i) + Y(j))], [(ONE, Y(j) + Y(i))]))
    if ell >= 2:
        rels.append(_rel("XYXY", (), [(ONE, _prod(X(2), Y(1, -1), X(2, -1), Y(1)))],
                         [(QM2, T(1) + T(1))]))

    # Q 表示
    rels.append(_rel("Q-inverse", (), [(ONE, Qw(1) + Qw(-1))], [(ONE, one)]))
    rels.append(_rel("Q-inverse-left", (), [(ONE, Qw(-1) + Qw(1))], [(ONE, one)]))
    for i in range(2, ell):
        rels.append(_rel("QTQ", (i,), [(ONE, _prod(Qw(1), T(i - 1), Qw(-1)))], [(ONE, T(i))]))
    if ell >= 2:
        rels.append(_rel("Q2TQ2", (), [(ONE, _prod(Qw(1), Qw(1), T(ell - 1), Qw(-1), Qw(-1)))],
                         [(ONE, T(1))]))
        rels.append(_rel("Q-as-X", (), [(ONE, Qw(1))],
                         [(ONE, X(1) + composite("T_range_up", ell, 1, ell - 1))]))
    else:
        rels.append(_rel("Q-as-X", (), [(ONE, Qw(1))], [(ONE, X(1))]))
    for i in range(1, ell):
        rels.append(_rel("QYQ", (i,), [(ONE, _prod(Qw(1), Y(i), Qw(-1)))], [(ONE, Y(i + 1))]))
    rels.append(_rel("QYQ-wrap", (ell,), [(ONE, _prod(Qw(1), Y(ell), Qw(-1)))], [(zeta, Y(1))]))

    # T_0 = Q^{-1} T_1 Q 的辫关系
    if ell >= 3:
        t0 = _prod(Qw(-1), T(1), Qw(1))
        for b in sorted({1, ell - 1}):
            rels.append(_rel("T0-braid", (b,), [(ONE, _prod(t0, T(b), t0))], [(ONE, _prod(T(b), t0, T(b)))]))

    # Q_{i,j} 引理
    for i in range(1, ell):
        for j in range(i, ell):
            qij = composite("Qij", ell, i, j)
            for a in range(i, j + 1):
                rels.append(_rel("Qij-Y", (i, j, a), [(ONE, _prod(qij, Y(a), qij.inverse()))],
                                 [(ONE, Y(a + 1))]))
            for b in range(i + 1, j):
                rels.append(_rel("Qij-T", (i, j, b), [(ONE, _prod(qij, T(b - 1), qij.inverse()))],
                                 [(ONE, T(b))]))

    # P_r 引理
    for r in range(1, ell):
        pr = composite("Pr", ell, r)
        for a in range(r, ell):
            rels.append(_rel("Pr-Y", (r, a), [(ONE, _prod(pr, Y(a + 1), pr.inverse()))],
                             [(zeta, Y(a - r + 1))]))
        for b in range(r + 1, ell):
            rels.append(_rel("Pr-T", (r, b), [(ONE, _prod(pr, T(b), pr.inverse()))],
                             [(ONE, T(b - r))]))

    # Ψ 良定义性用到的交换恒等式
    if ell >= 2:
        rels.append(_rel("PsiExchange", (), [(ONE, T(1) + X(1, -1))],
                         [(Q2_MINUS_1, X(1, -1)), (ONE, X(2, -1) + T(1))]))
        rels.append(_rel("PsiCommute", (), [(ONE, _prod(T(1), X(1, -1), X(2, -1)))],
                         [(ONE, _prod(X(1, -1), X(2, -1), T(1)))]))
    return rels


def q_conjugation_relations(ell: int, zeta: Scalar) -> List[WordRelation]:
    """wQY_{i-1}Q^{-1} = wY_i（1 < i ≤ ℓ）与 wQY_ℓQ^{-1} = ζwY_1"""
    rels = [_rel("QYQ", (i,), [(ONE, _prod(Qw(1), Y(i - 1), Qw(-1)))], [(ONE, Y(i))])
            for i in range(2, ell + 1)]
    rels.append(_rel("QYQ-wrap", (ell,), [(ONE, _prod(Qw(1), Y(ell), Qw(-1)))], [(zeta, Y(1))]))
    return rels


def check_relations(algebra: DoubleAffineHecke, relations: Iterable[WordRelation],
                    battery: Sequence[DahaElement]) -> List[dict]:
    results = []
    for rel in relations:
        for index, w in enumerate(battery):
            lhs, rhs = rel.sides(algebra, w)
            residual = lhs - rhs
            entry = {
                "relation": rel.name,
                "params": list(rel.params),
                "vector": str(w),
                "vector_index": index,
                "status": "pass" if residual.is_zero() else "fail",
                "sides": (lhs, rhs),
            }
            if not residual.is_zero():
                entry["residual"] = residual
            results.append(entry)
    return results


def check_daha_presentation(ell: int, zeta: Scalar, battery: Optional[Sequence[DahaElement]] = None,
                            algebra: Optional[DoubleAffineHecke] = None) -> List[dict]:
    """
    逐条检查 Ḧ_ℓ 的定义关系

    Args:
        ell: ℓ（不超过 MAX_DAHA_ELL）
        zeta: 中心单项式 ζ
        battery: 测试元素（默认 {1}）

    Returns:
        每个 (关系, 测试元素) 的结果字典列表，失败项带 residual
    """
    if ell > MAX_DAHA_ELL:
        raise ValueError(f"ℓ={ell} 超过上限 {MAX_DAHA_ELL}")
    algebra = algebra or DoubleAffineHecke(ell, zeta)
    battery = list(battery) if battery is not None else [algebra.one()]
    relations = daha_relations(ell, zeta)
    logger.debug(f"DAHA 关系 {len(relations)} 条, 测试元素 {len(battery)} 个")
    return check_relations(algebra, relations, battery)
