# modules/superdata.py - 奇偶序列与超数据模块

from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple


@dataclass(frozen=True)
class ParityData:
    """
    奇偶序列 s = (s_1, ..., s_κ)，s_i ∈ {±1}，其中 +1 恰好出现 m 次

    下标按 κ 周期延拓：s_{i+κ} = s_i，于是 s_0 = s_κ。
    """
    m: int
    n: int
    s: Tuple[int, ...]

    def __post_init__(self):
        s = tuple(int(x) for x in self.s)
        object.__setattr__(self, "s", s)
        if len(s) != self.m + self.n:
            raise ValueError(f"奇偶序列长度 {len(s)} 与 m+n={self.m + self.n} 不符")
        if any(x not in (1, -1) for x in s):
            raise ValueError(f"奇偶序列只能包含 ±1: {s}")
        if s.count(1) != self.m:
            raise ValueError(f"+1 的个数应为 m={self.m}: {s}")

    @property
    def kappa(self) -> int:
        return self.m + self.n

    def s_at(self, i: int) -> int:
        """周期延拓后的 s_i（1 起始）"""
        return self.s[(i - 1) % self.kappa]

    def node(self, i: int) -> int:
        """把结点下标规范到 Î = {0, ..., κ-1}"""
        return i % self.kappa

    def label(self, j: int) -> int:
        """把向量标号规范到 {1, ..., κ}"""
        return (j - 1) % self.kappa + 1

    def is_standard(self) -> bool:
        return self.s == standard_parity(self.m, self.n).s

    def to_string(self) -> str:
        return "".join("+" if x == 1 else "-" for x in self.s)

    def __str__(self):
        return self.to_string()


def standard_parity(m: int, n: int) -> ParityData:
    return ParityData(m, n, (1,) * m + (-1,) * n)


def parse_parity(text: str) -> ParityData:
    """解析 '++--' 形式的奇偶序列"""
    text = text.strip()
    if not text or any(ch not in "+-" for ch in text):
        raise ValueError(f"奇偶序列只能由 '+' 与 '-' 组成: {text!r}")
    s = tuple(1 if ch == "+" else -1 for ch in text)
    return ParityData(s.count(1), s.count(-1), s)


def cartan(pd: ParityData, i: int, j: int) -> int:
    """仿射 Cartan 矩阵元 a_{i,j} = (s_i+s_{i+1})δ_{i,j} - s_iδ_{i,j+1} - s_jδ_{i+1,j}（下标模 κ），与 ⟨α_i|α_j⟩ 一致"""
    k = pd.kappa
    i, j = i % k, j % k
    value = 0
    if i == j:
        value += pd.s_at(i) + pd.s_at(i + 1)
    if i == (j + 1) % k:
        value -= pd.s_at(i)
    if (i + 1) % k == j:
        value -= pd.s_at(j)
    return value


def m_matrix(pd: ParityData, i: int, j: int) -> int:
    """m_{i+1,i} = -m_{i,i+1} = s_{i+1}，其余为 0"""
    k = pd.kappa
    i, j = i % k, j % k
    if i == (j + 1) % k:
        return pd.s_at(i)
    if j == (i + 1) % k:
        return -pd.s_at(j)
    return 0


def mu(pd: ParityData, i: int) -> int:
    """μ_s(i) = s_1 + ... + s_i，μ_s(0) = 0"""
    i = i % pd.kappa
    return sum(pd.s[:i])


def tau(pd: ParityData) -> ParityData:
    """τs = (s_κ, s_1, ..., s_{κ-1})"""
    return ParityData(pd.m, pd.n, (pd.s[-1],) + pd.s[:-1])


def tau_inverse(pd: ParityData) -> ParityData:
    return ParityData(pd.m, pd.n, pd.s[1:] + (pd.s[0],))


def tau_power(pd: ParityData, r: int) -> ParityData:
    r %= pd.kappa
    if r == 0:
        return pd
    return ParityData(pd.m, pd.n, pd.s[-r:] + pd.s[:-r])


def node_parity(pd: ParityData, i: int) -> int:
    """|i| = (1 - s_i s_{i+1}) / 2"""
    return (1 - pd.s_at(i) * pd.s_at(i + 1)) // 2


def vector_parity(pd: ParityData, j: int) -> int:
    """|v_j| = (1 - s_j) / 2"""
    return (1 - pd.s_at(j)) // 2


def koszul_sign(pd: ParityData, i: int, r: int, j: Sequence[int]) -> int:
    """
    Koszul 符号 (-1)^{|i|·|j_r|}，其中 |j_r| = Σ_{a<r} |v_{j_a}|

    Args:
        pd: 奇偶数据
        i: 结点
        r: 位置（1 起始）
        j: 标号元组
    """
    if not 1 <= r <= len(j):
        raise IndexError(f"位置 r={r} 超出范围 1..{len(j)}")
    if not node_parity(pd, i):
        return 1
    passed = sum(vector_parity(pd, x) for x in j[:r - 1])
    return -1 if passed % 2 else 1


def root_pairing(pd: ParityData, i: int, j: int) -> int:
    """
    由 ε 基双线性型 ⟨ε_a|ε_b⟩ = s_a δ_{a,b} 计算 ⟨α_i|α_j⟩

    α_i = ε_i - ε_{i+1}（i ∈ I），α_0 = δ + ε_κ - ε_1，δ 与一切正交。
    """
    vi, vj = _simple_root(pd, i), _simple_root(pd, j)
    return sum(pd.s_at(a) * vi[a] * vj.get(a, 0) for a in vi)


def _simple_root(pd: ParityData, i: int) -> Dict[int, int]:
    k = pd.kappa
    i %= k
    if i == 0:
        return {k: 1, 1: -1}
    return {i: 1, i + 1: -1}


def weight_of_key(pd: ParityData, key: Sequence[int]) -> Tuple[int, ...]:
    """λ_a = 标号 a 在 key 中出现的次数（a = 1..κ）"""
    return tuple(sum(1 for x in key if x == a) for a in range(1, pd.kappa + 1))


def k_eigen_exponent(pd: ParityData, i: int, key: Sequence[int]) -> int:
    """K_i 在 v_key 上的本征值指数 s_iλ_i - s_{i+1}λ_{i+1}（结点 0 读作 κ 与 1）"""
    lam = weight_of_key(pd, key)
    k = pd.kappa
    a = (i - 1) % k + 1 if i % k else k
    b = a % k + 1
    return pd.s_at(a) * lam[a - 1] - pd.s_at(b) * lam[b - 1]


@dataclass(frozen=True)
class CartanData:
    """由奇偶序列导出的全部组合数据"""
    pd: ParityData
    cartan: Tuple[Tuple[int, ...], ...] = field(init=False)
    m_matrix: Tuple[Tuple[int, ...], ...] = field(init=False)
    node_parities: Tuple[int, ...] = field(init=False)
    mu_values: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        k = self.pd.kappa
        nodes = range(k)
        object.__setattr__(self, "cartan", tuple(tuple(cartan(self.pd, i, j) for j in nodes) for i in nodes))
        object.__setattr__(self, "m_matrix", tuple(tuple(m_matrix(self.pd, i, j) for j in nodes) for i in nodes))
        object.__setattr__(self, "node_parities", tuple(node_parity(self.pd, i) for i in nodes))
        object.__setattr__(self, "mu_values", tuple(mu(self.pd, i) for i in nodes))


def cartan_data(pd: ParityData) -> CartanData:
    return CartanData(pd)
