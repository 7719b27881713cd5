# modules/looprep.py - 向量表示与张量幂模块（量子仿射超代数的 Chevalley 与流模式作用）

import itertools
import threading
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from modules.scalar import ONE, ZERO, Scalar, as_scalar, psi_series, q_pow
from modules.superdata import (
    ParityData,
    k_eigen_exponent,
    koszul_sign,
    mu,
    node_parity,
    standard_parity,
    vector_parity,
)
from utils.logger import setup_logger

logger = setup_logger(__name__)

Key = Tuple[int, ...]
Laurent = Dict[Tuple[int, ...], Scalar]  # {指数向量: 系数}

CURRENT_FAMILIES = ("E", "F", "K+", "K-")
CHEVALLEY_FAMILIES = ("e", "f", "t", "tinv")
CURRENT_FLAVORS = ("toroidal", "affine")
CHEVALLEY_FLAVORS = ("vertical", "affine", "horizontal")
_FAMILY_ALIASES = {"x+": "E", "x-": "F", "k+": "K+", "k-": "K-"}


# ==========================================================================
# 标号工具
# ==========================================================================

def all_keys(kappa: int, ell: int) -> List[Key]:
    """(0,κ]^ℓ 中全部标号元组（字典序）"""
    return list(itertools.product(range(1, kappa + 1), repeat=ell))


def nondecreasing_keys(kappa: int, ell: int) -> List[Key]:
    return list(itertools.combinations_with_replacement(range(1, kappa + 1), ell))


def is_nondecreasing(key: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(key, key[1:]))


def render_key(key: Sequence[int]) -> str:
    return "v(" + ",".join(str(j) for j in key) + ")"


def _require_nondecreasing(key: Sequence[int]):
    if not is_nondecreasing(key):
        raise ValueError(f"流模式作用要求非降标号: {tuple(key)}")


# ==========================================================================
# Laurent 多项式（交换变量）
# ==========================================================================

def laurent_accumulate(target: Laurent, source: Laurent, coeff: Scalar = ONE):
    """target += coeff · source（原地）"""
    for nu, c in source.items():
        value = target.get(nu, ZERO) + c * coeff
        if value:
            target[nu] = value
        else:
            target.pop(nu, None)


def laurent_mul(a: Laurent, b: Laurent) -> Laurent:
    result: Laurent = {}
    for nu1, c1 in a.items():
        for nu2, c2 in b.items():
            nu = tuple(x + y for x, y in zip(nu1, nu2))
            value = result.get(nu, ZERO) + c1 * c2
            if value:
                result[nu] = value
            else:
                result.pop(nu, None)
    return result


def laurent_scale(a: Laurent, c) -> Laurent:
    c = as_scalar(c)
    if not c:
        return {}
    return {nu: v * c for nu, v in a.items()}


@dataclass(frozen=True)
class SpectralPoint:
    """谱参数单项式 coeff · V^nu，V 为后端的交换变量（ξ，或函子空间中的 Y）"""
    coeff: Scalar
    nu: Tuple[int, ...]

    def power(self, k: int) -> Laurent:
        return {tuple(k * x for x in self.nu): self.coeff ** k}


PointFn = Callable[[int, int], SpectralPoint]  # (结点 i, 位置 p) -> a_p


def spectral_points(pd: ParityData, ell: int, base: Scalar, variable_sign: int = 1) -> PointFn:
    """
    构造谱参数 a_p = base^{μ_s(i)} · V_p^{variable_sign}

    Args:
        pd: 奇偶数据
        ell: 张量次数
        base: 平移底数（张量表示与仿射函子取 q，环面竖直作用取 d^{-1}q）
        variable_sign: +1 表示 ξ_p，-1 表示 Y_p^{-1}
    """
    def point(i: int, p: int) -> SpectralPoint:
        nu = [0] * ell
        nu[p - 1] = variable_sign
        return SpectralPoint(base ** mu(pd, i), tuple(nu))
    return point


# ==========================================================================
# 正规序乘积的模式系数
# ==========================================================================

def _factor_coeffs(c: int, point: SpectralPoint, direction: str, count: int) -> List[Laurent]:
    """
    ψ_c(a/z) 的展开系数

    '+'：z^{-k} 的系数，即 ψ_c(u) 在 u = 0 处展开后代入 u = a/z；
    '-'：z^k 的系数，即 u = ∞ 处展开，u^{-k} = a^{-k} z^k。
    """
    series = psi_series(c, "-" if direction == "+" else "+")
    sign = 1 if direction == "+" else -1
    return [laurent_scale(point.power(sign * k), series[k]) for k in range(count)]


def product_expansion(factors: Sequence[Tuple[int, SpectralPoint]], direction: str, count: int,
                      ell: Optional[int] = None) -> List[Laurent]:
    """Π ψ_c(a/z) 的 φ^± 展开前 count 个系数（逐因子卷积）"""
    if ell is None:
        ell = len(factors[0][1].nu) if factors else 0
    result: List[Laurent] = [{(0,) * ell: ONE}] + [{} for _ in range(count - 1)]
    for c, point in factors:
        coeffs = _factor_coeffs(c, point, direction, count)
        merged: List[Laurent] = [{} for _ in range(count)]
        for a in range(count):
            if not result[a]:
                continue
            for b in range(count - a):
                laurent_accumulate(merged[a + b], laurent_mul(result[a], coeffs[b]))
        result = merged
    return result[:count]


def normal_ordered_coefficient(delta: SpectralPoint, factors: Sequence[Tuple[int, SpectralPoint]],
                               order: str, n: int) -> Laurent:
    """
    :[δ(a/z) Π ψ_c(a_p/z)]^±: 中 z^{-n} 的系数

    '+' 序：φ^+(z)Σ_{k≥0} a^k z^{-k} + φ^-(z)Σ_{k>0} a^{-k} z^k
    '-' 序：φ^+(z)Σ_{k>0} a^k z^{-k} + φ^-(z)Σ_{k≥0} a^{-k} z^k
    """
    if order not in ("+", "-"):
        raise ValueError(f"正规序方向必须是 '+' 或 '-': {order}")
    total: Laurent = {}
    if n > 0 or (n == 0 and order == "+"):
        plus = product_expansion(factors, "+", n + 1, len(delta.nu))
        start = 0 if order == "+" else 1
        for k in range(start, n + 1):
            laurent_accumulate(total, laurent_mul(delta.power(k), plus[n - k]))
    else:
        minus = product_expansion(factors, "-", -n + 1, len(delta.nu))
        start = 1 if order == "+" else 0
        for k in range(start, -n + 1):
            laurent_accumulate(total, laurent_mul(delta.power(-k), minus[-n - k]))
    return total


def _canonical_family(family: str) -> str:
    family = _FAMILY_ALIASES.get(family, family)
    if family not in CURRENT_FAMILIES + CHEVALLEY_FAMILIES:
        raise ValueError(f"未知的算子族: {family}")
    return family


def current_terms(pd: ParityData, family: str, i: int, n: int, key: Sequence[int],
                  point: PointFn) -> List[Tuple[Key, Laurent]]:
    """
    流 x^±_i(z), k^±_i(z) 在非降基向量 v_key 上 z^{-n} 系数的展开

    Args:
        pd: 奇偶数据
        family: E (x+) / F (x-) / K+ / K-
        i: 结点，1 ≤ i < κ
        n: 模式
        key: 非降标号元组
        point: 谱参数 a_p

    Returns:
        [(目标标号, 交换变量的 Laurent 多项式)]，目标标号可能不再非降
    """
    family = _canonical_family(family)
    if family not in CURRENT_FAMILIES:
        raise ValueError(f"{family} 不是流算子")
    if not 1 <= i < pd.kappa:
        raise ValueError(f"流算子结点必须在 1..κ-1 内: i={i}")
    key = tuple(key)
    _require_nondecreasing(key)

    a1 = sum(1 for j in key if j < i)
    a2 = a1 + key.count(i)
    a3 = a2 + key.count(i + 1)
    terms: List[Tuple[Key, Laurent]] = []

    if family == "E":
        c = -pd.s_at(i + 1)
        for r in range(a2 + 1, a3 + 1):
            factors = [(c, point(i, p)) for p in range(r + 1, a3 + 1)]
            laurent = normal_ordered_coefficient(point(i, r), factors, "+", n)
            if laurent:
                target = key[:r - 1] + (key[r - 1] - 1,) + key[r:]
                terms.append((target, laurent_scale(laurent, koszul_sign(pd, i, r, key))))
    elif family == "F":
        c = pd.s_at(i)
        for r in range(a1 + 1, a2 + 1):
            factors = [(c, point(i, p)) for p in range(a1 + 1, r)]
            laurent = normal_ordered_coefficient(point(i, r), factors, "-", n)
            if laurent:
                target = key[:r - 1] + (key[r - 1] + 1,) + key[r:]
                terms.append((target, laurent_scale(laurent, pd.s_at(i) * koszul_sign(pd, i, r, key))))
    else:
        if (family == "K+" and n < 0) or (family == "K-" and n > 0):
            return []
        factors = [(pd.s_at(i), point(i, p)) for p in range(a1 + 1, a2 + 1)]
        factors += [(-pd.s_at(i + 1), point(i, p)) for p in range(a2 + 1, a3 + 1)]
        direction = "+" if family == "K+" else "-"
        laurent = product_expansion(factors, direction, abs(n) + 1)[abs(n)] if factors else (
            {(0,) * len(key): ONE} if n == 0 else {})
        if laurent:
            terms.append((key, laurent))
    return terms


# ==========================================================================
# 算子标签
# ==========================================================================

@dataclass(frozen=True)
class ModeOp:
    """
    带标签的算子：流模式 (E/F/K+/K-, 结点, 模式) 或 Chevalley 生成元 (e/f/t/tinv, 结点)

    flavor 区分同名算子的不同实现：
      toroidal   环面竖直作用（流，默认），结点 0 经 Ψ 共轭得到
      affine     仿射函子（流或 Chevalley，无 d 平移）
      vertical   竖直子代数的 Chevalley 三元组（默认，结点 0 为 𝖤₀/𝖥₀/𝖪₀）
      horizontal 水平子代数的 Chevalley 三元组（结点 0 为 E₀/F₀/K₀）
    纯张量后端忽略 flavor。
    """
    family: str
    node: int
    mode: int = 0
    flavor: Optional[str] = None

    def __post_init__(self):
        family = _canonical_family(self.family)
        object.__setattr__(self, "family", family)
        if family in CHEVALLEY_FAMILIES:
            if self.mode != 0:
                raise ValueError(f"Chevalley 生成元没有模式: {family}{self.node} 模式 {self.mode}")
            flavor = self.flavor or "vertical"
            allowed = CHEVALLEY_FLAVORS
        else:
            flavor = self.flavor or "toroidal"
            allowed = CURRENT_FLAVORS
        if flavor not in allowed:
            raise ValueError(f"{family} 不支持 flavor={flavor}，可选 {allowed}")
        object.__setattr__(self, "flavor", flavor)

    def parity(self, pd: ParityData) -> int:
        if self.family in ("E", "F", "e", "f"):
            return node_parity(pd, self.node)
        return 0

    def is_zero(self) -> bool:
        """K^+ 的负模式与 K^- 的正模式恒为零"""
        return (self.family == "K+" and self.mode < 0) or (self.family == "K-" and self.mode > 0)

    def __str__(self):
        if self.family in CHEVALLEY_FAMILIES:
            return f"{self.family}{self.node}[{self.flavor}]"
        return f"{self.family}({self.node},{self.mode})"


# ==========================================================================
# 纯张量 V(ξ)^{⊗ℓ}
# ==========================================================================

PlainKey = Tuple[Key, Tuple[int, ...]]  # (标号, ξ 指数)


class PlainTensor:
    """V_s(ξ_1)⊗…⊗V_s(ξ_ℓ) 的元素：{(标号, ξ 指数): 系数}"""

    __slots__ = ("pd", "ell", "terms")

    def __init__(self, pd: ParityData, ell: int, terms: Dict[PlainKey, Scalar] = None):
        self.pd = pd
        self.ell = ell
        self.terms: Dict[PlainKey, Scalar] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, pd: ParityData, key: Sequence[int], nu: Sequence[int] = None, coeff=ONE) -> "PlainTensor":
        key = tuple(key)
        if any(not 1 <= j <= pd.kappa for j in key):
            raise ValueError(f"标号超出 1..κ: {key}")
        nu = tuple(nu) if nu is not None else (0,) * len(key)
        return cls(pd, len(key), {(key, nu): as_scalar(coeff)})

    def zero(self) -> "PlainTensor":
        return PlainTensor(self.pd, self.ell)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PlainTensor):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "PlainTensor") -> "PlainTensor":
        result = dict(self.terms)
        for k, c in other.terms.items():
            result[k] = result.get(k, ZERO) + c
        return PlainTensor(self.pd, self.ell, result)

    def __neg__(self):
        return PlainTensor(self.pd, self.ell, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "PlainTensor") -> "PlainTensor":
        return self + (-other)

    def scale(self, c) -> "PlainTensor":
        c = as_scalar(c)
        return PlainTensor(self.pd, self.ell, {k: v * c for k, v in self.terms.items()})

    def sorted_items(self) -> List[Tuple[PlainKey, Scalar]]:
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (key, nu), c in self.sorted_items():
            xi = "" if not any(nu) else " * xi^(" + ",".join(str(x) for x in nu) + ")"
            parts.append(f"({c}){xi} ⊗ {render_key(key)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PlainTensor({self})"


# ==========================================================================
# Chevalley 作用（余乘积，Koszul 符号）
# ==========================================================================

@dataclass(frozen=True)
class ChevalleyGen:
    kind: str  # e / f / t / tinv
    node: int

    def __post_init__(self):
        if self.kind not in CHEVALLEY_FAMILIES:
            raise ValueError(f"未知的 Chevalley 生成元: {self.kind}")


def _single_slot(pd: ParityData, kind: str, i: int, j: int) -> Optional[Tuple[Scalar, int, int]]:
    """单个张量因子上的作用：(系数, 新标号, ξ 指数增量)；结点 0 经 θ 算子实现"""
    k = pd.kappa
    i %= k
    if kind == "e":
        if i == 0:
            return (ONE, k, 1) if j == 1 else None
        return (ONE, j - 1, 0) if j == i + 1 else None
    if kind == "f":
        if i == 0:
            return (as_scalar(pd.s_at(k)), 1, -1) if j == k else None
        return (as_scalar(pd.s_at(j)), j + 1, 0) if j == i else None
    raise ValueError(f"单因子作用只支持 e/f: {kind}")


_chevalley_cache: Dict[Tuple, List[Tuple[Scalar, Key, Tuple[int, ...]]]] = {}
_chevalley_lock = threading.Lock()


def chevalley_on_key(pd: ParityData, gen: ChevalleyGen, key: Sequence[int]) -> List[Tuple[Scalar, Key, Tuple[int, ...]]]:
    """
    Chevalley 生成元在 v_key 上的作用

    Δ(e_i) = e_i⊗t_i + 1⊗e_i，Δ(f_i) = f_i⊗1 + t_i^{-1}⊗f_i 逐次展开：
    e 作用在第 p 个因子，其后因子上作用 t；f 作用在第 p 个因子，其前因子上作用 t^{-1}；
    奇算子越过前面的奇向量时带 Koszul 符号。

    Returns:
        [(系数, 新标号, ξ 指数增量)]
    """
    key = tuple(key)
    cache_key = (pd.s, gen, key)
    with _chevalley_lock:
        cached = _chevalley_cache.get(cache_key)
    if cached is not None:
        return cached

    ell = len(key)
    zero_nu = (0,) * ell
    i = gen.node % pd.kappa
    result: List[Tuple[Scalar, Key, Tuple[int, ...]]] = []
    if gen.kind in ("t", "tinv"):
        exponent = k_eigen_exponent(pd, i, key)
        result.append((q_pow(exponent if gen.kind == "t" else -exponent), key, zero_nu))
    else:
        t_exps = [k_eigen_exponent(pd, i, (j,)) for j in key]
        for p in range(1, ell + 1):
            single = _single_slot(pd, gen.kind, i, key[p - 1])
            if single is None:
                continue
            coeff, label, shift = single
            if gen.kind == "e":
                coeff = coeff * q_pow(sum(t_exps[p:]))
            else:
                coeff = coeff * q_pow(-sum(t_exps[:p - 1]))
            coeff = coeff * koszul_sign(pd, i, p, key)
            nu = list(zero_nu)
            nu[p - 1] = shift
            result.append((coeff, key[:p - 1] + (label,) + key[p:], tuple(nu)))

    with _chevalley_lock:
        return _chevalley_cache.setdefault(cache_key, result)


def chevalley_apply(g: ChevalleyGen, v: PlainTensor) -> PlainTensor:
    result: Dict[PlainKey, Scalar] = {}
    for (key, nu), c in v.terms.items():
        for coeff, target, shift in chevalley_on_key(v.pd, g, key):
            target_key = (target, tuple(x + y for x, y in zip(nu, shift)))
            result[target_key] = result.get(target_key, ZERO) + c * coeff
    return PlainTensor(v.pd, v.ell, result)


# ==========================================================================
# Hecke 算子 𝒯
# ==========================================================================

def hecke_T_apply(i: int, v: PlainTensor, exp: int = 1) -> PlainTensor:
    """
    𝒯_i 作用在第 i、i+1 个因子上（ξ 指数不变）

    𝒯(v_a⊗v_a) = s_a q^{1+s_a} v_a⊗v_a
    𝒯(v_a⊗v_b) = (-1)^{|v_a||v_b|} q v_b⊗v_a                       (a < b)
    𝒯(v_a⊗v_b) = (-1)^{|v_a||v_b|} q v_b⊗v_a + (q²-1) v_a⊗v_b      (a > b)
    """
    if not 1 <= i < v.ell:
        raise IndexError(f"𝒯 的下标超出范围: i={i}, ℓ={v.ell}")
    if exp not in (1, -1):
        raise ValueError(f"指数必须为 ±1: {exp}")
    pd = v.pd
    q = q_pow(1)
    result: Dict[PlainKey, Scalar] = {}

    def _add(k: PlainKey, c: Scalar):
        result[k] = result.get(k, ZERO) + c

    for (key, nu), c in v.terms.items():
        a, b = key[i - 1], key[i]
        if a == b:
            s_a = pd.s_at(a)
            _add((key, nu), c * q_pow(1 + s_a) * s_a)
            continue
        sign = -1 if vector_parity(pd, a) and vector_parity(pd, b) else 1
        swapped = key[:i - 1] + (b, a) + key[i + 1:]
        _add((swapped, nu), c * q * sign)
        if a > b:
            _add((key, nu), c * (q_pow(2) - 1))
    product = PlainTensor(pd, v.ell, result)
    if exp == 1:
        return product
    # 𝒯^{-1} = q^{-2}𝒯 + (q^{-2} - 1)
    return product.scale(q_pow(-2)) + v.scale(q_pow(-2) - 1)


# ==========================================================================
# 流模式作用
# ==========================================================================

def mode_apply_plain(family: str, i: int, r: int, v: PlainTensor) -> PlainTensor:
    """
    x^±_{i,r}, k^±_{i,r} 在 V(ξ)^{⊗ℓ} 上的作用（谱参数 q^{μ_s(i)}ξ_p）

    输入的每个基向量都必须是非降标号，否则抛出 ValueError。
    """
    pd = v.pd
    point = spectral_points(pd, v.ell, q_pow(1), 1)
    result: Dict[PlainKey, Scalar] = {}
    for (key, nu), c in v.terms.items():
        for target, laurent in current_terms(pd, family, i, r, key, point):
            for shift, coeff in laurent.items():
                k = (target, tuple(x + y for x, y in zip(nu, shift)))
                result[k] = result.get(k, ZERO) + c * coeff
    return PlainTensor(pd, v.ell, result)


def plain_apply(op: ModeOp, v: PlainTensor) -> PlainTensor:
    """ModeOp 在纯张量上的求值（流模式或 Chevalley 生成元）"""
    if op.family in CURRENT_FAMILIES:
        if op.is_zero():
            return v.zero()
        return mode_apply_plain(op.family, op.node, op.mode, v)
    return chevalley_apply(ChevalleyGen(op.family, op.node), v)


# ==========================================================================
# 括号表达式树
# ==========================================================================

@dataclass(frozen=True)
class OpLeaf:
    op: ModeOp


@dataclass(frozen=True)
class Bracket:
    """[X, Y]_a = XY - (-1)^{|X||Y|} a YX"""
    left: "Tree"
    right: "Tree"
    a: Scalar


@dataclass(frozen=True)
class Compose:
    """coeff · f_1 ∘ f_2 ∘ …（最右侧先作用）"""
    factors: Tuple["Tree", ...]
    coeff: Scalar = ONE


Tree = Union[OpLeaf, Bracket, Compose]


def tree_parity(pd: ParityData, tree: Tree) -> int:
    if isinstance(tree, OpLeaf):
        return tree.op.parity(pd)
    if isinstance(tree, Bracket):
        return (tree_parity(pd, tree.left) + tree_parity(pd, tree.right)) % 2
    return sum(tree_parity(pd, f) for f in tree.factors) % 2


def evaluate_tree(pd: ParityData, tree: Tree, vector, apply: Callable):
    """
    在任意后端上求值表达式树

    Args:
        pd: 奇偶数据（决定括号中的超符号）
        tree: 表达式树
        vector: 支持 +、-、scale 的向量（PlainTensor 或 FunctorVector）
        apply: apply(op, vector) -> vector
    """
    if isinstance(tree, OpLeaf):
        return apply(tree.op, vector)
    if isinstance(tree, Bracket):
        xy = evaluate_tree(pd, tree.left, evaluate_tree(pd, tree.right, vector, apply), apply)
        yx = evaluate_tree(pd, tree.right, evaluate_tree(pd, tree.left, vector, apply), apply)
        sign = -1 if tree_parity(pd, tree.left) and tree_parity(pd, tree.right) else 1
        return xy - yx.scale(tree.a * sign)
    for factor in reversed(tree.factors):
        vector = evaluate_tree(pd, factor, vector, apply)
    return vector.scale(tree.coeff)


def dj_drinfeld_zero_modes(m: int, n: int, flavor: str = "affine",
                           pd: Optional[ParityData] = None) -> Dict[str, Tree]:
    """
    标准奇偶下 e_0, f_0, t_0 在新 Drinfeld 表示中的括号表达式（c = 1）

    e_0 = (-1)^n s_κ [x^-_{κ-1,0}, …[x^-_{m,0}, …[x^-_{2,0}, x^-_{1,1}]_{q^{-1}}…]_{q^{-1}}]_q…]_q (k_1⋯k_{κ-1})^{-1}
    f_0 = s_κ k_1⋯k_{κ-1} […[[x^+_{1,-1}, x^+_{2,0}]_q, …x^+_{m,0}]_q, x^+_{m+1,0}]_{q^{-1}}, …x^+_{κ-1,0}]_{q^{-1}}
    t_0 = (k_1⋯k_{κ-1})^{-1}
    """
    standard = standard_parity(m, n)
    if pd is not None and pd.s != standard.s:
        raise ValueError(f"同构公式只对标准奇偶序列成立: {pd}")
    kappa = m + n
    if kappa < 2:
        raise ValueError(f"要求 κ ≥ 2: κ={kappa}")
    q, q_inv = q_pow(1), q_pow(-1)
    s_kappa = standard.s_at(kappa)

    inner: Tree = OpLeaf(ModeOp("F", 1, 1, flavor))
    for i in range(2, kappa):
        inner = Bracket(OpLeaf(ModeOp("F", i, 0, flavor)), inner, q_inv if i <= m else q)
    k_inverse = Compose(tuple(OpLeaf(ModeOp("K-", i, 0, flavor)) for i in range(1, kappa)))
    k_product = Compose(tuple(OpLeaf(ModeOp("K+", i, 0, flavor)) for i in range(1, kappa)))
    e0 = Compose((inner, k_inverse), as_scalar((-1) ** n * s_kappa))

    inner_f: Tree = OpLeaf(ModeOp("E", 1, -1, flavor))
    for i in range(2, kappa):
        inner_f = Bracket(inner_f, OpLeaf(ModeOp("E", i, 0, flavor)), q if i <= m else q_inv)
    f0 = Compose((k_product, inner_f), as_scalar(s_kappa))
    return {"e0": e0, "f0": f0, "t0": k_inverse}


# ==========================================================================
# 检查
# ==========================================================================

def check_entry(relation: str, nodes: Iterable[int], modes: Iterable[int], vector: str, lhs, rhs) -> dict:
    """两侧分别保留在 sides 中，供数值预筛独立特化；status 为符号比较结果"""
    residual = lhs - rhs
    entry = {
        "relation": relation,
        "nodes": list(nodes),
        "modes": list(modes),
        "vector": vector,
        "status": "pass" if residual.is_zero() else "fail",
        "sides": (lhs, rhs),
    }
    if not residual.is_zero():
        entry["residual"] = residual
    return entry


def zero_mode_agreement_check(pd: ParityData, ell: int) -> List[dict]:
    """i ∈ I 时 x^+_{i,0} = e_i，x^-_{i,0} = f_i，k^±_{i,0} = t_i^{±1}（全部非降基向量）"""
    pairs = (("E", "e"), ("F", "f"), ("K+", "t"), ("K-", "tinv"))
    results = []
    for key in nondecreasing_keys(pd.kappa, ell):
        v = PlainTensor.basis(pd, key)
        for i in range(1, pd.kappa):
            for family, kind in pairs:
                lhs = mode_apply_plain(family, i, 0, v)
                rhs = chevalley_apply(ChevalleyGen(kind, i), v)
                results.append(check_entry(f"zero-mode {family}~{kind}", [i], [0], render_key(key), lhs, rhs))
    return results


def dj_agreement_plain(pd: ParityData, ell: int = 1) -> List[dict]:
    """
    括号表达式 e_0, f_0, t_0 与 θ 算子给出的 Chevalley 作用比较（纯张量后端）

    中间结果必须保持非降标号，因此只适用于 ℓ = 1；ℓ ≥ 2 在函子空间中比较。
    """
    if ell != 1:
        raise ValueError("纯张量后端只支持 ℓ = 1 的括号比较")
    trees = dj_drinfeld_zero_modes(pd.m, pd.n, pd=pd)
    results = []
    for key in nondecreasing_keys(pd.kappa, ell):
        v = PlainTensor.basis(pd, key)
        for name, kind in (("e0", "e"), ("f0", "f"), ("t0", "t")):
            lhs = evaluate_tree(pd, trees[name], v, plain_apply)
            rhs = chevalley_apply(ChevalleyGen(kind, 0), v)
            results.append(check_entry(f"DJ-{name}", [0], [], render_key(key), lhs, rhs))
    return results


def schur_weyl_commutation_check(pd: ParityData, ell: int) -> List[dict]:
    """
    𝒯 与有限部分 Chevalley 生成元交换，并满足 Hecke 二次关系、辫关系、远交换关系

    在 V^{⊗ℓ} 的全部基向量上逐一检查。
    """
    if ell < 2:
        raise ValueError(f"要求 ℓ ≥ 2: ℓ={ell}")
    q2 = q_pow(2)
    results = []
    keys = all_keys(pd.kappa, ell)
    logger.debug(f"Schur-Weyl 检查: s={pd}, ℓ={ell}, 基向量 {len(keys)} 个")
    for key in keys:
        v = PlainTensor.basis(pd, key)
        label = render_key(key)
        for t in range(1, ell):
            tv = hecke_T_apply(t, v)
            for i in range(1, pd.kappa):
                for kind in CHEVALLEY_FAMILIES:
                    g = ChevalleyGen(kind, i)
                    lhs = hecke_T_apply(t, chevalley_apply(g, v))
                    results.append(check_entry(f"T-commute-{kind}", [i, t], [], label, lhs, chevalley_apply(g, tv)))
            # (𝒯+1)(𝒯-q²) = 0
            ttv = hecke_T_apply(t, tv)
            results.append(check_entry("T-quadratic", [t], [], label, ttv + tv, tv.scale(q2) + v.scale(q2)))
            results.append(check_entry("T-inverse", [t], [], label, hecke_T_apply(t, hecke_T_apply(t, v, -1)), v))
        for t in range(1, ell - 1):
            lhs = hecke_T_apply(t, hecke_T_apply(t + 1, hecke_T_apply(t, v)))
            rhs = hecke_T_apply(t + 1, hecke_T_apply(t, hecke_T_apply(t + 1, v)))
            results.append(check_entry("T-braid", [t], [], label, lhs, rhs))
        for t in range(1, ell):
            for u in range(t + 2, ell):
                lhs = hecke_T_apply(t, hecke_T_apply(u, v))
                rhs = hecke_T_apply(u, hecke_T_apply(t, v))
                results.append(check_entry("T-far-commute", [t, u], [], label, lhs, rhs))
    return results
