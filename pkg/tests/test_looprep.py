# tests/test_looprep.py - 向量表示、张量幂与 Hecke 算子 𝒯

import pytest

from conftest import failures
from modules.looprep import (
    ChevalleyGen, ModeOp, PlainTensor, all_keys, chevalley_apply, current_terms,
    dj_agreement_plain, dj_drinfeld_zero_modes, hecke_T_apply, mode_apply_plain,
    nondecreasing_keys, normal_ordered_coefficient, plain_apply, render_key,
    SpectralPoint, schur_weyl_commutation_check, spectral_points, zero_mode_agreement_check
)
from modules.scalar import ONE, q_pow
from modules.superdata import standard_parity, tau


def basis(pd, key, nu=None, coeff=ONE):
    return PlainTensor.basis(pd, key, nu, coeff)


def test_keys():
    assert len(all_keys(4, 2)) == 16
    assert nondecreasing_keys(3, 2) == [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
    assert render_key((1, 2)) == "v(1,2)"


def test_mode_op_labels():
    assert ModeOp("x+", 1, 0).family == "E"
    assert ModeOp("k-", 2, -1).family == "K-"
    assert ModeOp("E", 1, 2).flavor == "toroidal"
    assert ModeOp("e", 0).flavor == "vertical"
    assert ModeOp("K+", 1, -1).is_zero()
    assert not ModeOp("K-", 1, -1).is_zero()
    assert str(ModeOp("F", 2, -1)) == "F(2,-1)"
    assert str(ModeOp("f", 0, 0, "horizontal")) == "f0[horizontal]"


@pytest.mark.parametrize("args", [("e", 1, 2), ("E", 1, 0, "vertical"), ("t", 1, 0, "toroidal"), ("G", 1, 0)])
def test_mode_op_rejects_bad_labels(args):
    with pytest.raises(ValueError):
        ModeOp(*args)


def test_coproduct_example(std31):
    v = basis(std31, (2, 2))
    expected = basis(std31, (1, 2), coeff=q_pow(-1)) + basis(std31, (2, 1))
    assert chevalley_apply(ChevalleyGen("e", 1), v) == expected


def test_t_eigenvalues(std31):
    v = basis(std31, (1, 2, 4))
    # s₁λ₁ - s₂λ₂ = 1 - 1
    assert chevalley_apply(ChevalleyGen("t", 1), v) == v
    # s₃λ₃ - s₄λ₄ = 0 - (-1)
    assert chevalley_apply(ChevalleyGen("t", 3), v) == v.scale(q_pow(1))
    assert chevalley_apply(ChevalleyGen("tinv", 3), v) == v.scale(q_pow(-1))


def test_node_zero_on_single_factor(std31):
    assert chevalley_apply(ChevalleyGen("e", 0), basis(std31, (1,))) == basis(std31, (4,), nu=(1,))
    assert chevalley_apply(ChevalleyGen("f", 0), basis(std31, (4,))) == basis(std31, (1,), nu=(-1,), coeff=-ONE)
    assert chevalley_apply(ChevalleyGen("e", 0), basis(std31, (2,))).is_zero()


def test_hecke_operator_cases(std31, std22):
    assert hecke_T_apply(1, basis(std31, (1, 1))) == basis(std31, (1, 1), coeff=q_pow(2))
    assert hecke_T_apply(1, basis(std22, (3, 3))) == basis(std22, (3, 3), coeff=-ONE)
    assert hecke_T_apply(1, basis(std31, (1, 2))) == basis(std31, (2, 1), coeff=q_pow(1))
    assert hecke_T_apply(1, basis(std31, (2, 1))) == (
        basis(std31, (1, 2), coeff=q_pow(1)) + basis(std31, (2, 1), coeff=q_pow(2) - 1))
    assert hecke_T_apply(1, basis(std22, (3, 4))) == basis(std22, (4, 3), coeff=-q_pow(1))


def test_hecke_operator_inverse(std22):
    for key in all_keys(4, 2):
        v = basis(std22, key)
        assert hecke_T_apply(1, hecke_T_apply(1, v), -1) == v


def test_hecke_operator_index(std31):
    with pytest.raises(IndexError):
        hecke_T_apply(2, basis(std31, (1, 2)))


def test_lone_delta_coefficient():
    a = SpectralPoint(q_pow(1), (1,))
    for n in (-2, -1, 0, 1, 3):
        assert normal_ordered_coefficient(a, [], "+", n) == a.power(n)
        assert normal_ordered_coefficient(a, [], "-", n) == a.power(n)


def test_raising_current_single_factor(std31):
    # x⁺_{1,r}(v₂) = (q^{μ(1)}ξ)^r v₁，μ(1) = 1
    v = basis(std31, (2,))
    assert mode_apply_plain("E", 1, 2, v) == basis(std31, (1,), nu=(2,), coeff=q_pow(2))
    assert mode_apply_plain("E", 1, -1, v) == basis(std31, (1,), nu=(-1,), coeff=q_pow(-1))
    assert mode_apply_plain("E", 1, 0, basis(std31, (1,))).is_zero()


def test_cartan_current_constant_term(std31):
    for i in range(1, 4):
        v = basis(std31, (i,))
        s_i = std31.s_at(i)
        assert mode_apply_plain("K+", i, 0, v) == v.scale(q_pow(s_i))
        assert mode_apply_plain("K-", i, 0, v) == v.scale(q_pow(-s_i))


def test_current_rejects_unsorted_keys(std31):
    with pytest.raises(ValueError):
        mode_apply_plain("E", 1, 0, basis(std31, (2, 1)))
    point = spectral_points(std31, 1, q_pow(1))
    with pytest.raises(ValueError):
        current_terms(std31, "E", 0, 0, (1,), point)


def test_plain_apply_zero_modes(std31):
    v = basis(std31, (1, 2))
    assert plain_apply(ModeOp("K+", 1, -1), v).is_zero()
    assert plain_apply(ModeOp("t", 1), v) == chevalley_apply(ChevalleyGen("t", 1), v)


@pytest.mark.parametrize("m,n,ell", [(3, 1, 1), (3, 1, 2), (2, 2, 2), (1, 2, 2)])
def test_zero_modes_match_chevalley(m, n, ell):
    results = zero_mode_agreement_check(standard_parity(m, n), ell)
    assert results
    assert not failures(results)


@pytest.mark.parametrize("m,n", [(3, 1), (1, 2), (1, 3), (2, 1)])
def test_bracket_formulas_for_node_zero(m, n):
    results = dj_agreement_plain(standard_parity(m, n), 1)
    assert not failures(results)


def test_bracket_formulas_need_standard_parity():
    pd = standard_parity(3, 1)
    with pytest.raises(ValueError):
        dj_drinfeld_zero_modes(3, 1, pd=tau(pd))
    with pytest.raises(ValueError):
        dj_agreement_plain(pd, 2)


@pytest.mark.parametrize("m,n,ell", [(2, 2, 2), (3, 1, 2), (2, 1, 3)])
def test_schur_weyl_commutation(m, n, ell):
    results = schur_weyl_commutation_check(standard_parity(m, n), ell)
    assert not failures(results)


def test_schur_weyl_needs_two_factors(std31):
    with pytest.raises(ValueError):
        schur_weyl_commutation_check(std31, 1)


