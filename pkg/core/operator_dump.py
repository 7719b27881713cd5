# core/operator_dump.py - 算子作用表导出

from typing import Dict, List, Optional

from modules.hecke import DoubleAffineHecke, GeneratorWord, composite, render_basis
from modules.looprep import (
    CHEVALLEY_FAMILIES, CURRENT_FAMILIES, ModeOp, PlainTensor, all_keys,
    nondecreasing_keys, plain_apply, render_key
)
from modules.scalar import d_pow, derived_params
from modules.toroidal import FunctorSpace, FunctorVector
from utils.run_config import RunConfig

DUMP_OPS = CURRENT_FAMILIES + CHEVALLEY_FAMILIES + ("psi", "psi-inverse", "P", "Qij", "word")


def _functor_rows(fv: FunctorVector) -> List[list]:
    """[(标号, DAHA 基元素, 系数)]"""
    return [[render_key(key), render_basis(basis), str(c)]
            for key, w in fv.sorted_items() for basis, c in w.sorted_items()]


def dump_functor_operator(config: RunConfig, op: str, node: int = 0, mode: int = 0,
                          flavor: Optional[str] = None) -> dict:
    """
    算子在 1⊗v_𝒋（全部非降标号）上的作用表

    Returns:
        {"op", "node", "mode", "flavor", "parity", "ell", "table": [{"input", "output"}]}
    """
    pd = config.parity_data()
    space = FunctorSpace(pd.m, pd.n, config.ell)
    if op == "psi":
        apply, label = space.psi_apply, "psi"
    elif op == "psi-inverse":
        apply, label = space.psi_inverse, "psi-inverse"
    else:
        mode_op = ModeOp(op, node % pd.kappa, mode, flavor)
        apply, label = (lambda v: space.apply(mode_op, v)), str(mode_op)
    table = []
    for key in nondecreasing_keys(pd.kappa, config.ell):
        image = apply(space.vector(pd, key))
        table.append({"input": render_key(key), "output": _functor_rows(image)})
    return {"op": label, "node": node, "mode": mode, "flavor": flavor, "parity": pd.to_string(),
            "ell": config.ell, "table": table}


def dump_plain_matrix(config: RunConfig, op: str, node: int = 0, mode: int = 0) -> dict:
    """
    V(ξ)^{⊗ℓ} 上的稀疏矩阵：行为 (𝒋, ν)，列为 𝒋；流算子只作用在非降标号上
    """
    pd = config.parity_data()
    mode_op = ModeOp(op, node % pd.kappa, mode)
    keys = nondecreasing_keys(pd.kappa, config.ell) if op in CURRENT_FAMILIES else all_keys(pd.kappa, config.ell)
    entries = []
    for key in keys:
        image = plain_apply(mode_op, PlainTensor.basis(pd, key))
        for (target, nu), c in image.sorted_items():
            entries.append({"row": [list(target), list(nu)], "col": list(key), "value": str(c)})
    return {"op": str(mode_op), "parity": pd.to_string(), "ell": config.ell, "entries": entries}


def dump_daha_word(config: RunConfig, op: str, params: List[int] = None, word: str = None) -> dict:
    """P_r、Q_{i,j} 或任意生成元字的正规形"""
    zeta = d_pow(1) if config.zeta == "formal" else derived_params(config.m, config.n)[3]
    algebra = DoubleAffineHecke(config.ell, zeta)
    params = list(params or [])
    if op == "word":
        if not word:
            raise ValueError("dump word 需要 --word")
        gw = GeneratorWord.parse(word)
    else:
        gw = composite("Pr" if op == "P" else op, config.ell, *params)
    element = algebra.element(gw)
    return {
        "op": op,
        "params": params,
        "word": str(gw),
        "ell": config.ell,
        "zeta": str(zeta),
        "normal_form": [[render_basis(basis), str(c)] for basis, c in element.sorted_items()],
    }


def dump_operator(config: RunConfig, op: str, node: int = 0, mode: int = 0, flavor: Optional[str] = None,
                  plain: bool = False, params: List[int] = None, word: str = None) -> Dict:
    """
    dump 子命令的入口

    Raises:
        ValueError: 未知算子或参数不合法
    """
    if op not in DUMP_OPS:
        raise ValueError(f"未知算子: {op}（可选 {', '.join(DUMP_OPS)}）")
    if op in ("P", "Qij", "word"):
        return dump_daha_word(config, op, params, word)
    if plain:
        if op.startswith("psi"):
            raise ValueError("Ψ 只在函子空间上定义")
        return dump_plain_matrix(config, op, node, mode)
    return dump_functor_operator(config, op, node, mode, flavor)
