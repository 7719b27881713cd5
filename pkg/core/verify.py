# core/verify.py - 关系验证套件（环面、仿射、有限、DAHA、旋转）

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

try:
    from config import (
        DEFAULT_D0, DEFAULT_JOBS, DEFAULT_MODE, DEFAULT_Q0, DEFAULT_SEED,
        MIN_TOROIDAL_KAPPA, NUMERIC_RANDOM_POINTS, RANDOM_BATTERY_SIZE, RESIDUAL_PREVIEW_KEYS,
        SERRE_MODE_BOUND
    )
except ImportError:
    import sys
    from pathlib import Path
    project_root = Path(__file__).resolve().parents[1]
    if str(project_root) not in sys.path:
        sys.path.insert(0, str(project_root))
    from config import (
        DEFAULT_D0, DEFAULT_JOBS, DEFAULT_MODE, DEFAULT_Q0, DEFAULT_SEED,
        MIN_TOROIDAL_KAPPA, NUMERIC_RANDOM_POINTS, RANDOM_BATTERY_SIZE, RESIDUAL_PREVIEW_KEYS,
        SERRE_MODE_BOUND
    )
from modules.hecke import (
    DahaElement, DoubleAffineHecke, check_daha_presentation, check_relations,
    default_battery, random_battery, render_basis, q_conjugation_relations
)
from modules.looprep import (
    ModeOp, PlainTensor, dj_agreement_plain, render_key,
    schur_weyl_commutation_check, zero_mode_agreement_check
)
from modules.scalar import ONE, Scalar, d_pow, derived_params, q_pow, specialize
from modules.superdata import ParityData, cartan, m_matrix, node_parity, root_pairing, tau
from modules.toroidal import (
    FunctorSpace, FunctorVector, central_charge_check, dj_agreement_functor,
    psi_well_defined_check, rotation_identity_check, sort_confluence_check,
    tau_hat_check, vector_label, weight_check, zero_current_agreement_check
)
from utils.logger import SuiteLogger, setup_logger

logger = setup_logger(__name__)

Word = Tuple[ModeOp, ...]  # 从左到右书写，最右侧的算子先作用
OpSum = Tuple[Tuple[Scalar, Word], ...]

RELATION_IDS = (
    "CK", "KK1", "KK2", "KE", "KF", "EF", "EEFF-zero",
    "EE-quadratic", "FF-quadratic", "Serre1", "Serre2", "Serre3", "Serre4", "KE-residue",
)
EXCLUDED_RELATIONS = {
    "Serre5": "mn=2 incompatible with κ≥4",
    "Serre6": "mn=2 incompatible with κ≥4",
}
SUITES = ("finite", "affine", "toroidal", "daha", "rotation")


# ==========================================================================
# 关系实例与展开
# ==========================================================================

@dataclass(frozen=True)
class RelationInstance:
    """一条定义关系在给定结点与模式处的系数等式"""
    relation: str
    pd: ParityData
    nodes: Tuple[int, ...]
    modes: Tuple[int, ...]
    variant: str = ""

    def label(self) -> str:
        return f"{self.relation}[{self.variant}]" if self.variant else self.relation


@dataclass(frozen=True)
class Graded:
    """带权与奇偶的算子和，用于 ⟦X, Y⟧ = XY - (-1)^{|X||Y|} q^{-⟨β|γ⟩} YX"""
    terms: OpSum
    weight: Tuple[int, ...]
    parity: int


def _mode_op(family: str, node: int, mode: int, kappa: int, flavor: Optional[str] = None) -> ModeOp:
    return ModeOp(family, node % kappa, mode, flavor)


def _weight_pairing(pd: ParityData, beta: Sequence[int], gamma: Sequence[int]) -> int:
    total = 0
    for a, x in enumerate(beta):
        if not x:
            continue
        for b, y in enumerate(gamma):
            if y:
                total += x * y * root_pairing(pd, a, b)
    return total


def graded_leaf(pd: ParityData, op: ModeOp) -> Graded:
    weight = [0] * pd.kappa
    sign = {"E": 1, "e": 1, "F": -1, "f": -1}.get(op.family, 0)
    weight[op.node % pd.kappa] = sign
    return Graded(((ONE, (op,)),), tuple(weight), op.parity(pd))


def q_bracket(pd: ParityData, x: Graded, y: Graded) -> Graded:
    """⟦X, Y⟧ = XY - (-1)^{|X||Y|} q^{-⟨β|γ⟩} YX"""
    a = q_pow(-_weight_pairing(pd, x.weight, y.weight))
    if x.parity and y.parity:
        a = -a
    terms = [(c1 * c2, w1 + w2) for c1, w1 in x.terms for c2, w2 in y.terms]
    terms += [(-(a * c2 * c1), w2 + w1) for c1, w1 in x.terms for c2, w2 in y.terms]
    weight = tuple(p + r for p, r in zip(x.weight, y.weight))
    return Graded(tuple(terms), weight, (x.parity + y.parity) % 2)


def _super_commutator(pd: ParityData, x: ModeOp, y: ModeOp, coeff: Scalar = ONE) -> List[Tuple[Scalar, Word]]:
    sign = -1 if x.parity(pd) and y.parity(pd) else 1
    return [(coeff, (x, y)), (-(coeff * sign), (y, x))]


def _symmetrized(build: Callable[[int, int], Graded], r1: int, r2: int) -> OpSum:
    first = build(r1, r2).terms
    return first + build(r2, r1).terms


def expand_relation(ri: RelationInstance) -> Tuple[OpSum, OpSum]:
    """
    把关系实例展开为 (lhs, rhs)，两侧均为 Σ 系数·算子字，C = 1

    模式约定：z·E(z) 的 z^{-r} 系数为 E_{r+1}；K^±_{i,0} = K_i^{±1}，K^+ 的负模式与 K^- 的正模式为零。

    Raises:
        ValueError: 未知或被排除的关系（Serre5/6）
    """
    pd = ri.pd
    k = pd.kappa
    if ri.relation in EXCLUDED_RELATIONS:
        raise ValueError(f"{ri.relation} 不参与验证: {EXCLUDED_RELATIONS[ri.relation]}")
    if ri.relation not in RELATION_IDS:
        raise ValueError(f"未知的关系: {ri.relation}")
    nodes, modes = ri.nodes, ri.modes

    def op(family, node, mode=0):
        return _mode_op(family, node, mode, k)

    if ri.relation == "CK":
        i, j = nodes
        (r,) = modes
        family = ri.variant or "E"
        a = cartan(pd, i, j) * (1 if family == "E" else -1)
        x = op(family, j, r)
        return ((ONE, (op("K+", i), x)),), ((q_pow(a), (x, op("K+", i))),)

    if ri.relation in ("KK1", "KK2"):
        i, j = nodes
        r, s = modes
        if ri.relation == "KK1":
            family = ri.variant or "K+"
            x, y = op(family, i, r), op(family, j, s)
        else:
            x, y = op("K-", i, r), op("K+", j, s)
        return ((ONE, (x, y)),), ((ONE, (y, x)),)

    if ri.relation in ("KE", "KF"):
        i, j = nodes
        r, s = modes
        family = ri.variant or "K+"
        target = "E" if ri.relation == "KE" else "F"
        a = cartan(pd, i, j) * (1 if target == "E" else -1)
        dm, qa = d_pow(m_matrix(pd, i, j)), q_pow(a)
        lhs = ((dm, (op(family, i, r + 1), op(target, j, s))),
               (-qa, (op(family, i, r), op(target, j, s + 1))))
        rhs = ((dm * qa, (op(target, j, s), op(family, i, r + 1))),
               (-ONE, (op(target, j, s + 1), op(family, i, r))))
        return lhs, rhs

    if ri.relation == "EF":
        i, j = nodes
        r, s = modes
        q = q_pow(1)
        lhs = tuple(_super_commutator(pd, op("E", i, r), op("F", j, s), q - q.inverse()))
        rhs: OpSum = ()
        if i % k == j % k:
            rhs = ((ONE, (op("K+", i, r + s),)), (-ONE, (op("K-", i, r + s),)))
        return lhs, rhs

    if ri.relation == "EEFF-zero":
        i, j = nodes
        r, s = modes
        family = ri.variant or "E"
        return tuple(_super_commutator(pd, op(family, i, r), op(family, j, s))), ()

    if ri.relation in ("EE-quadratic", "FF-quadratic"):
        i, j = nodes
        r, s = modes
        family = ri.relation[0]
        a = cartan(pd, i, j) * (1 if family == "E" else -1)
        dm, qa = d_pow(m_matrix(pd, i, j)), q_pow(a)
        sign = -1 if node_parity(pd, i) and node_parity(pd, j) else 1
        lhs = ((dm, (op(family, i, r + 1), op(family, j, s))),
               (-qa, (op(family, i, r), op(family, j, s + 1))))
        rhs = ((dm * qa * sign, (op(family, j, s), op(family, i, r + 1))),
               (-ONE * sign, (op(family, j, s + 1), op(family, i, r))))
        return lhs, rhs

    if ri.relation in ("Serre1", "Serre2"):
        i, j = nodes
        r1, r2, s = modes
        family = "E" if ri.relation == "Serre1" else "F"

        def build(a, b):
            inner = q_bracket(pd, graded_leaf(pd, op(family, i, b)), graded_leaf(pd, op(family, j, s)))
            return q_bracket(pd, graded_leaf(pd, op(family, i, a)), inner)
        return _symmetrized(build, r1, r2), ()

    if ri.relation in ("Serre3", "Serre4"):
        (i,) = nodes
        r1, t1, r2, t2 = modes
        family = "E" if ri.relation == "Serre3" else "F"

        def build(a, b):
            inner = q_bracket(pd, graded_leaf(pd, op(family, i, b)), graded_leaf(pd, op(family, i - 1, t2)))
            middle = q_bracket(pd, graded_leaf(pd, op(family, i + 1, t1)), inner)
            return q_bracket(pd, graded_leaf(pd, op(family, i, a)), middle)
        return _symmetrized(build, r1, r2), ()

    # KE-residue: (q^a - q^{-a}) E_{j,-1} = d^{-m} (E_j K^-_{i,-1} - q^a K^-_{i,-1} E_j) K_i
    i, j = nodes
    a = cartan(pd, i, j)
    dm_inv = d_pow(-m_matrix(pd, i, j))
    lhs = ((q_pow(a) - q_pow(-a), (op("E", j, -1),)),)
    rhs = ((dm_inv, (op("E", j, 0), op("K-", i, -1), op("K+", i))),
           (-(dm_inv * q_pow(a)), (op("K-", i, -1), op("E", j, 0), op("K+", i))))
    return lhs, rhs


def _prune(side: OpSum) -> OpSum:
    return tuple((c, w) for c, w in side if c and not any(o.is_zero() for o in w))


def toroidal_instances(pd: ParityData, R: int, serre_bound: int = SERRE_MODE_BOUND) -> List[RelationInstance]:
    """全部结点 i, j ∈ Î 与 |模式| ≤ R 的关系实例（两侧全部为零的实例被略去）"""
    k = pd.kappa
    nodes = range(k)
    modes = range(-R, R + 1)
    shifted = range(-R, R)
    B = min(R, serre_bound)
    small = range(-B, B + 1)
    out: List[RelationInstance] = []

    def add(relation, ns, ms, variant=""):
        ri = RelationInstance(relation, pd, tuple(ns), tuple(ms), variant)
        lhs, rhs = expand_relation(ri)
        if _prune(lhs) or _prune(rhs):
            out.append(ri)

    for family in ("E", "F"):
        for i in nodes:
            for j in nodes:
                for r in modes:
                    add("CK", (i, j), (r,), family)
    for family, rng in (("K+", range(0, R + 1)), ("K-", range(-R, 1))):
        for i in nodes:
            for j in nodes:
                if j < i:
                    continue
                for r in rng:
                    for s in rng:
                        if (i, r) < (j, s):
                            add("KK1", (i, j), (r, s), family)
    for i in nodes:
        for j in nodes:
            for r in range(-R, 1):
                for s in range(0, R + 1):
                    add("KK2", (i, j), (r, s))
    for relation in ("KE", "KF"):
        for family in ("K+", "K-"):
            for i in nodes:
                for j in nodes:
                    for r in shifted:
                        for s in shifted:
                            add(relation, (i, j), (r, s), family)
    for i in nodes:
        for j in nodes:
            for r in modes:
                for s in modes:
                    add("EF", (i, j), (r, s))
    for i in nodes:
        for j in nodes:
            if cartan(pd, i, j) == 0:
                for family in ("E", "F"):
                    for r in modes:
                        for s in modes:
                            add("EEFF-zero", (i, j), (r, s), family)
            else:
                for relation in ("EE-quadratic", "FF-quadratic"):
                    for r in shifted:
                        for s in shifted:
                            add(relation, (i, j), (r, s))
    for i in nodes:
        if cartan(pd, i, i) != 0:
            for j in sorted({(i - 1) % k, (i + 1) % k}):
                for relation in ("Serre1", "Serre2"):
                    for r1 in small:
                        for r2 in small:
                            if r1 <= r2:
                                for s in small:
                                    add(relation, (i, j), (r1, r2, s))
        else:
            for relation in ("Serre3", "Serre4"):
                for r1 in small:
                    for r2 in small:
                        if r1 <= r2:
                            for t1 in small:
                                for t2 in small:
                                    add(relation, (i,), (r1, t1, r2, t2))
    for i in nodes:
        for j in nodes:
            add("KE-residue", (i, j), ())
    return out


def affine_instances(pd: ParityData, flavor: str) -> List[Tuple[str, Tuple[int, ...], OpSum, OpSum]]:
    """
    Chevalley 层 Drinfeld-Jimbo 关系（全部 i, j ∈ Î）

    Returns:
        [(关系名, 结点, lhs, rhs)]
    """
    k = pd.kappa
    q = q_pow(1)

    def op(kind, node):
        return ModeOp(kind, node % k, 0, flavor)

    def leaf(kind, node):
        return graded_leaf(pd, op(kind, node))

    out = []
    for i in range(k):
        for j in range(k):
            a = cartan(pd, i, j)
            if i < j:
                out.append(("t-commute", (i, j), ((ONE, (op("t", i), op("t", j))),),
                            ((ONE, (op("t", j), op("t", i))),)))
            out.append(("t-e", (i, j), ((ONE, (op("t", i), op("e", j), op("tinv", i))),),
                        ((q_pow(a), (op("e", j),)),)))
            out.append(("t-f", (i, j), ((ONE, (op("t", i), op("f", j), op("tinv", i))),),
                        ((q_pow(-a), (op("f", j),)),)))
            rhs: OpSum = ()
            if i == j:
                rhs = ((ONE, (op("t", i),)), (-ONE, (op("tinv", i),)))
            out.append(("e-f", (i, j), tuple(_super_commutator(pd, op("e", i), op("f", j), q - q.inverse())), rhs))
            if a == 0 and i <= j:
                out.append(("e-e-zero", (i, j), tuple(_super_commutator(pd, op("e", i), op("e", j))), ()))
                out.append(("f-f-zero", (i, j), tuple(_super_commutator(pd, op("f", i), op("f", j))), ()))
    for i in range(k):
        for kind in ("e", "f"):
            if cartan(pd, i, i) != 0:
                for j in sorted({(i - 1) % k, (i + 1) % k}):
                    term = q_bracket(pd, leaf(kind, i), q_bracket(pd, leaf(kind, i), leaf(kind, j)))
                    out.append((f"serre-{kind}", (i, j), term.terms, ()))
            else:
                inner = q_bracket(pd, leaf(kind, i), leaf(kind, i - 1))
                term = q_bracket(pd, leaf(kind, i), q_bracket(pd, leaf(kind, i + 1), inner))
                out.append((f"serre-odd-{kind}", (i,), term.terms, ()))
    out.append(("t-central", tuple(range(k)), ((ONE, tuple(op("t", i) for i in range(k))),), ((ONE, ()),)))
    return out


# ==========================================================================
# 求值
# ==========================================================================

class WordEvaluator:
    """单个测试向量上的算子字求值，按后缀缓存"""

    def __init__(self, apply: Callable, vector):
        self.apply = apply
        self.vector = vector
        self._cache: Dict[Word, object] = {(): vector}

    def __call__(self, word: Word):
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        value = self.apply(word[0], self(word[1:]))
        self._cache[word] = value
        return value

    def side(self, terms: OpSum):
        total = self.vector.zero()
        for c, w in terms:
            if any(o.is_zero() for o in w):
                continue
            total = total + self(w).scale(c)
        return total

    def residual(self, lhs: OpSum, rhs: OpSum):
        return self.side(lhs) - self.side(rhs)


def _coefficients(x) -> Iterable[Tuple[object, Scalar]]:
    """(基元素, 系数)；FunctorVector 的基元素为 (标号, DAHA 基元素)"""
    if isinstance(x, FunctorVector):
        for key, w in x.terms.items():
            for basis, c in w.terms.items():
                yield (key, basis), c
    else:
        yield from x.terms.items()


def _residual_scalars(residual) -> Iterable[Scalar]:
    for _, c in _coefficients(residual):
        yield c


def residual_preview(residual, limit: int = RESIDUAL_PREVIEW_KEYS) -> List[dict]:
    """残差的前 limit 项，{key, value} 文本形式"""
    if isinstance(residual, FunctorVector):
        return residual.preview(limit)
    if isinstance(residual, PlainTensor):
        items = residual.sorted_items()[:limit]
        return [{"key": f"{render_key(key)} xi^({','.join(str(x) for x in nu)})", "value": str(c)}
                for (key, nu), c in items]
    if isinstance(residual, DahaElement):
        return [{"key": render_basis(key), "value": str(c)} for key, c in residual.sorted_items()[:limit]]
    raise TypeError(f"无法渲染残差: {type(residual).__name__}")


def numeric_verdict(residual, q0, d0) -> str:
    """在 (q0, d0) 处特化残差的每个系数；有非零值则为 fail，特化不可行时为 n/a"""
    try:
        for c in _residual_scalars(residual):
            if specialize(c, q0, d0) != 0:
                return "fail"
    except ValueError:
        return "n/a"
    return "pass"


def random_point(rng: random.Random) -> Tuple[Fraction, Fraction]:
    """有理平方 (q, d)，q > 1，半整数次幂总能特化"""
    a = rng.randint(2, 9)
    b = rng.randint(1, a - 1)
    c, e = rng.randint(1, 9), rng.randint(1, 9)
    return Fraction(a, b) ** 2, Fraction(c, e) ** 2


class NumericScreen:
    """
    数值预筛：两侧各自特化到 (q0, d0) 与 count 个随机有理点后逐项比较

    不做符号减法；某个点上无法特化（半整数次幂遇到非平方）时跳过该点，全部跳过则为 n/a。
    """

    def __init__(self, q0, d0, seed: int = 0, count: int = NUMERIC_RANDOM_POINTS):
        rng = random.Random(seed)
        self.points = [(Fraction(q0), Fraction(d0))] + [random_point(rng) for _ in range(count)]

    @staticmethod
    def _values(x, point) -> Dict[object, Fraction]:
        q0, d0 = point
        values = {}
        for basis, c in _coefficients(x):
            value = specialize(c, q0, d0)
            if value:
                values[basis] = value
        return values

    def verdict(self, lhs, rhs=None) -> str:
        usable = 0
        for point in self.points:
            try:
                left = self._values(lhs, point)
                right = self._values(rhs, point) if rhs is not None else {}
            except ValueError:
                continue
            usable += 1
            if left != right:
                return "fail"
        return "pass" if usable else "n/a"


# ==========================================================================
# 套件
# ==========================================================================

@dataclass
class SuiteOptions:
    mode: str = DEFAULT_MODE
    q0: Fraction = Fraction(DEFAULT_Q0)
    d0: Fraction = Fraction(DEFAULT_D0)
    jobs: int = DEFAULT_JOBS
    seed: int = DEFAULT_SEED
    battery: str = "default"
    serre_modes: int = SERRE_MODE_BOUND
    numeric_points: int = NUMERIC_RANDOM_POINTS


class VerificationRunner:
    """
    验证套件运行器

    每个套件返回报告字典：
    {suite, params:{m,n,ell,R,parity,mode}, results:[...], summary:{pass,fail,excluded}}
    """

    def __init__(self, options: SuiteOptions = None):
        self.options = options or SuiteOptions()
        if self.options.mode not in ("symbolic", "numeric", "both"):
            raise ValueError(f"未知的比较方式: {self.options.mode}")
        if self.options.jobs < 1:
            raise ValueError(f"jobs 必须为正整数: {self.options.jobs}")
        self.screen = NumericScreen(self.options.q0, self.options.d0, self.options.seed, self.options.numeric_points)

    # ---------- 公共工具 ----------

    def _map(self, func: Callable, items: Sequence) -> List:
        """按输入顺序返回结果；jobs > 1 时使用线程池"""
        if self.options.jobs == 1 or len(items) <= 1:
            return [func(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.options.jobs) as pool:
            return list(pool.map(func, items))

    def finalize(self, entry: dict) -> dict:
        """
        补充两种判定并渲染残差（残差当且仅当 status 为 fail 时出现）

        symbolic 为符号比较结果（numeric 模式下预筛通过时为 skipped），numeric 为数值预筛结果；
        numeric 模式下 status 取数值判定，其余模式取符号判定。
        """
        sides = entry.pop("sides", None)
        residual = entry.pop("residual", None)
        if entry["status"] == "excluded":
            return entry
        mode = self.options.mode
        entry.setdefault("symbolic", entry["status"])
        if mode != "symbolic" and "numeric" not in entry:
            if sides is not None:
                entry["numeric"] = self.screen.verdict(*sides)
            elif residual is not None:
                entry["numeric"] = self.screen.verdict(residual)
            else:
                entry["numeric"] = "n/a"
        if entry.get("numeric") == "fail" and entry["symbolic"] == "pass":
            logger.error(f"数值判定与符号判定矛盾: {entry['relation']} {entry.get('nodes')} {entry.get('vector')}")
        if mode == "numeric" and entry.get("numeric") in ("pass", "fail"):
            entry["status"] = entry["numeric"]
        if entry["status"] == "fail":
            if residual is None and sides is not None:
                residual = sides[0] - sides[1]
            if residual is not None:
                entry["residual"] = residual_preview(residual)
        return entry

    def build_report(self, suite: str, params: dict, results: List[dict]) -> dict:
        results = [self.finalize(dict(entry)) for entry in results]
        summary = {status: sum(1 for e in results if e["status"] == status)
                   for status in ("pass", "fail", "excluded")}
        params = dict(params)
        params["mode"] = self.options.mode
        return {"suite": suite, "params": params, "results": results, "summary": summary}

    def _params(self, pd: Optional[ParityData], ell: int, R: Optional[int], m=None, n=None) -> dict:
        return {
            "m": pd.m if pd else m,
            "n": pd.n if pd else n,
            "ell": ell,
            "R": R,
            "parity": pd.to_string() if pd else None,
        }

    def evaluate_battery(self, named: Sequence[Tuple[str, Tuple[int, ...], Tuple[int, ...], OpSum, OpSum]],
                         vectors: Sequence, apply: Callable) -> List[dict]:
        """
        全部 (关系实例 × 测试向量)，按实例为主序输出

        两侧分别求值后先做数值预筛；numeric 模式下预筛通过即跳过符号减法。
        """
        mode = self.options.mode

        def run_vector(v):
            evaluator = WordEvaluator(apply, v)
            label = vector_label(v) if isinstance(v, FunctorVector) else str(v)
            out = []
            for name, nodes, modes, lhs_terms, rhs_terms in named:
                lhs, rhs = evaluator.side(lhs_terms), evaluator.side(rhs_terms)
                entry = {"relation": name, "nodes": list(nodes), "modes": list(modes), "vector": label}
                if mode != "symbolic":
                    entry["numeric"] = self.screen.verdict(lhs, rhs)
                if mode == "numeric" and entry["numeric"] == "pass":
                    entry["status"], entry["symbolic"] = "pass", "skipped"
                else:
                    residual = lhs - rhs
                    entry["status"] = "pass" if residual.is_zero() else "fail"
                    if not residual.is_zero():
                        entry["residual"] = residual
                out.append(entry)
            return out

        per_vector = self._map(run_vector, list(vectors))
        return [per_vector[v][index] for index in range(len(named)) for v in range(len(per_vector))]

    def _vectors(self, space: FunctorSpace, pd: ParityData) -> List[FunctorVector]:
        return space.vector_battery(pd, self.options.battery, self.options.seed)

    # ---------- 环面 ----------

    def run_toroidal_suite(self, pd: ParityData, ell: int, R: int,
                           vectors: Optional[Sequence[FunctorVector]] = None) -> dict:
        """
        环面超代数定义关系（全部结点、|模式| ≤ R）与 K₀⋯K_{κ-1} = 1、权分解

        Raises:
            ValueError: κ < 4
        """
        if pd.kappa < MIN_TOROIDAL_KAPPA:
            raise ValueError(f"κ ≥ {MIN_TOROIDAL_KAPPA} required (κ={pd.kappa})")
        suite_log = SuiteLogger("toroidal")
        suite_log.log_start({"parity": pd.to_string(), "ell": ell, "R": R})
        space = FunctorSpace(pd.m, pd.n, ell)
        vectors = list(vectors) if vectors is not None else self._vectors(space, pd)
        instances = toroidal_instances(pd, R, self.options.serre_modes)
        named = []
        for ri in instances:
            lhs, rhs = expand_relation(ri)
            named.append((ri.label(), ri.nodes, ri.modes, lhs, rhs))
        logger.info(f"环面套件: {len(instances)} 个关系实例, {len(vectors)} 个测试向量")
        results = self.evaluate_battery(named, vectors, space.apply)
        for relation, note in EXCLUDED_RELATIONS.items():
            results.append({"relation": relation, "nodes": [], "modes": [], "vector": "",
                            "status": "excluded", "note": note})
        results += central_charge_check(space, pd, vectors)
        results += weight_check(space, pd)
        report = self.build_report("toroidal", self._params(pd, ell, R), results)
        suite_log.log_report(report)
        return report

    # ---------- 仿射 ----------

    def run_affine_suite(self, pd: ParityData, ell: int) -> dict:
        """
        Chevalley 层 Drinfeld-Jimbo 关系：竖直 (𝖤₀,𝖥₀,𝖪₀)、仿射 (e₀,f₀,t₀)、水平 (E₀,F₀,K₀) 三种结点 0 作用；
        另含零模式字典与括号表达式比较（标准奇偶）
        """
        suite_log = SuiteLogger("affine")
        suite_log.log_start({"parity": pd.to_string(), "ell": ell})
        space = FunctorSpace(pd.m, pd.n, ell)
        vectors = self._vectors(space, pd)
        results: List[dict] = []
        for flavor in ("vertical", "affine", "horizontal"):
            named = [(f"{name}[{flavor}]", nodes, (), lhs, rhs)
                     for name, nodes, lhs, rhs in affine_instances(pd, flavor)]
            results += self.evaluate_battery(named, vectors, space.apply)
        results += zero_mode_agreement_check(pd, ell)
        if pd.is_standard():
            if ell == 1:
                results += dj_agreement_plain(pd, ell)
            results += dj_agreement_functor(space, pd)
        report = self.build_report("affine", self._params(pd, ell, None), results)
        suite_log.log_report(report)
        return report

    # ---------- 有限 ----------

    def run_finite_suite(self, pd: ParityData, ell: int) -> dict:
        """𝒯 与有限 Chevalley 生成元交换，𝒯 满足 Hecke 关系"""
        suite_log = SuiteLogger("finite")
        suite_log.log_start({"parity": pd.to_string(), "ell": ell})
        results = schur_weyl_commutation_check(pd, ell)
        report = self.build_report("finite", self._params(pd, ell, None), results)
        suite_log.log_report(report)
        return report

    # ---------- DAHA ----------

    def run_daha_suite(self, ell: int, m: int, n: int, zeta_kind: str = "derived") -> dict:
        """
        Ḧ_ℓ 的定义关系（默认元素组 + 随机元素组）与 wQY_{i-1}Q^{-1} = wY_i、wQY_ℓQ^{-1} = ζwY_1

        Args:
            ell: ℓ
            m, n: 决定 ζ = q₁^{n-m}
            zeta_kind: derived（ζ = q₁^{n-m}）或 formal（ζ = d，独立的中心单项式）
        """
        if zeta_kind == "formal":
            zeta = d_pow(1)
        elif zeta_kind == "derived":
            zeta = derived_params(m, n)[3]
        else:
            raise ValueError(f"未知的 ζ 取法: {zeta_kind}")
        suite_log = SuiteLogger("daha")
        suite_log.log_start({"ell": ell, "zeta": str(zeta)})
        algebra = DoubleAffineHecke(ell, zeta)
        fixed = default_battery(algebra)
        randoms = random_battery(algebra, self.options.seed, RANDOM_BATTERY_SIZE)
        results = self._map(lambda w: check_daha_presentation(ell, zeta, [w], algebra), fixed)
        flat = [entry for chunk in results for entry in chunk]
        flat += check_relations(algebra, q_conjugation_relations(ell, zeta), randoms)
        for entry in flat:
            entry["nodes"] = entry.pop("params")
            entry["modes"] = []
            entry.pop("vector_index", None)
        params = self._params(None, ell, None, m, n)
        params["zeta"] = str(zeta)
        report = self.build_report("daha", params, flat)
        suite_log.log_report(report)
        return report

    # ---------- 旋转 ----------

    def run_rotation_suite(self, pd: ParityData, ell: int, R: int) -> dict:
        """Ψ 良定义、Ψ 共轭的结点平移与回绕恒等式、τ̂、结点 0 零模式与排序合流"""
        suite_log = SuiteLogger("rotation")
        suite_log.log_start({"parity": pd.to_string(), "ell": ell, "R": R})
        space = FunctorSpace(pd.m, pd.n, ell)
        vectors = self._vectors(space, pd)
        chunks = self._map(lambda v: rotation_identity_check(space, pd, R, [v]), vectors)
        results = [entry for chunk in chunks for entry in chunk]
        target_vectors = self._vectors(space, tau(pd))
        chunks = self._map(lambda v: tau_hat_check(space, pd, R, [v]), target_vectors)
        results += [entry for chunk in chunks for entry in chunk]
        if ell >= 2:
            results += psi_well_defined_check(space, pd)
            results += sort_confluence_check(space, pd, 100, self.options.seed)
        results += zero_current_agreement_check(space, pd, vectors)
        report = self.build_report("rotation", self._params(pd, ell, R), results)
        suite_log.log_report(report)
        return report

    # ---------- 计时 ----------

    def bench(self, suites: Dict[str, Callable[[], dict]]) -> List[dict]:
        """依次运行各套件并记录耗时（秒）"""
        timings = []
        for name, run in suites.items():
            start = time.perf_counter()
            report = run()
            timings.append({"suite": name, "seconds": round(time.perf_counter() - start, 3),
                            "summary": report["summary"]})
        return timings
