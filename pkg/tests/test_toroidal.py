# tests/test_toroidal.py - 函子空间：排序、竖直流、零层算子与旋转映射 Ψ

import pytest

from conftest import debug_messages, failures
from modules.hecke import T, X
from modules.looprep import ModeOp, nondecreasing_keys
from modules.scalar import ONE, d_pow, q_pow
from modules.superdata import standard_parity, tau
from modules.toroidal import (
    FunctorSpace, FunctorVector, balance_chars, central_charge_check, dj_agreement_functor,
    psi_well_defined_check, rotation_identity_check, sort_confluence_check, tau_hat_check,
    weight_check, zero_current_agreement_check
)

PD = standard_parity(3, 1)


def test_sort_even_pair(space31_2):
    h = space31_2.algebra
    expected = FunctorVector(PD, h, {(1, 2): h.element(T(1)).scale(q_pow(-1))})
    assert space31_2.vector(PD, (2, 1)) == expected


def test_sort_odd_pair():
    space = FunctorSpace(1, 3, 2)
    pd = standard_parity(1, 3)
    h = space.algebra
    expected = FunctorVector(pd, h, {(2, 4): h.element(T(1)).scale(-q_pow(-1))})
    assert space.vector(pd, (4, 2)) == expected


def test_sorted_input_unchanged(space31_2):
    v = space31_2.vector(PD, (1, 3))
    assert v.terms == {(1, 3): space31_2.algebra.one()}


def test_functor_vector_requires_sorted_keys(space31_2):
    with pytest.raises(ValueError):
        FunctorVector(PD, space31_2.algebra, {(3, 1): space31_2.algebra.one()})
    with pytest.raises(ValueError):
        space31_2.vector(PD, (1, 5))


def test_balance_chars():
    assert balance_chars(PD, (1, 1, 4, 4)) == ((1, q_pow(2)), (3, -ONE))
    assert balance_chars(PD, (1, 2, 3)) == ()


def test_equal_labels_absorb_hecke_factor(space31_2):
    h = space31_2.algebra
    lhs = FunctorVector(PD, h, {(1, 1): h.element(T(1))})
    assert lhs == space31_2.vector(PD, (1, 1)).scale(q_pow(2))
    odd = FunctorVector(PD, h, {(4, 4): h.element(T(1))})
    assert odd == space31_2.vector(PD, (4, 4)).scale(-1)


def test_mixed_tags_do_not_add(space31):
    with pytest.raises(ValueError):
        space31.vector(PD, (1,)) + space31.vector(tau(PD), (1,))


def test_text_form(space31):
    v = space31.vector(PD, (1,))
    assert str(v) == "[(1) * Q^0 * T[1] * Y^(0)] ⊗ v(1)"
    assert v.preview() == [{"key": "v(1)", "value": "(1) * Q^0 * T[1] * Y^(0)"}]
    assert str(space31.zero(PD)) == "0"


def test_vertical_current_single_factor(space31):
    h = space31.algebra
    q1_inv = space31.q1.inverse()
    image = space31.apply(ModeOp("E", 1, 1), space31.vector(PD, (2,)))
    assert image == space31.vector(PD, (1,), h.basis(mu=(-1,), coeff=q1_inv))
    affine = space31.apply(ModeOp("E", 1, 1, "affine"), space31.vector(PD, (2,)))
    assert affine == space31.vector(PD, (1,), h.basis(mu=(-1,), coeff=q_pow(1)))


def test_vertical_mode_apply_rejects_node_zero(space31):
    with pytest.raises(ValueError):
        space31.vertical_mode_apply(ModeOp("E", 0, 0), space31.vector(PD, (1,)))
    with pytest.raises(ValueError):
        space31.apply(ModeOp("E", 0, 0, "affine"), space31.vector(PD, (1,)))


def test_level_zero_chevalley(space31):
    h = space31.algebra
    v1, v4 = space31.vector(PD, (1,)), space31.vector(PD, (4,))
    assert space31.chevalley_level0_apply("E0", v1) == space31.vector(PD, (4,), h.basis(k=1))
    assert space31.chevalley_level0_apply("F0", v4) == space31.vector(PD, (1,), h.basis(k=-1, coeff=-ONE))
    assert space31.chevalley_level0_apply("vE0", v1) == space31.vector(PD, (4,), h.basis(mu=(-1,), coeff=d_pow(-1)))
    assert space31.chevalley_level0_apply("aE0", v1) == space31.vector(PD, (4,), h.basis(mu=(-1,)))
    assert space31.chevalley_level0_apply("K0", v1) == v1.scale(q_pow(-1))
    assert space31.chevalley_level0_apply("E0", space31.vector(PD, (2,))).is_zero()


@pytest.mark.parametrize("tag", ["Z0", "E", "Ex"])
def test_level_zero_rejects_unknown_tags(space31, tag):
    with pytest.raises(ValueError):
        space31.chevalley_level0_apply(tag, space31.vector(PD, (1,)))


def test_psi_example(space31_2):
    h = space31_2.algebra
    image = space31_2.psi_apply(space31_2.vector(PD, (2, 4)))
    expected = FunctorVector(tau(PD), h, {(1, 3): h.element(X(2, -1) + T(1)).scale(q_pow(-1))})
    assert image == expected


def test_psi_without_top_label(space31_2):
    image = space31_2.psi_apply(space31_2.vector(PD, (1, 2)))
    assert image == FunctorVector(tau(PD), space31_2.algebra, {(2, 3): space31_2.algebra.one()})


@pytest.mark.parametrize("key", nondecreasing_keys(4, 2))
def test_psi_round_trip(space31_2, key):
    v = space31_2.vector(PD, key)
    assert space31_2.psi_inverse(space31_2.psi_apply(v)) == v
    assert space31_2.psi_apply(space31_2.psi_inverse(v)) == v
    assert space31_2.psi_power(v, 0) == v
    assert space31_2.psi_power(v, 1) == space31_2.psi_apply(v)
    assert space31_2.psi_power(space31_2.psi_power(v, -3), 3) == v


def test_batteries(space31, space31_2):
    assert len(space31_2.generator_battery(PD)) == 6
    assert len(space31.vector_battery(PD)) == 7 * 4
    assert len(space31.vector_battery(PD, "random", seed=1)) == 6 * 4
    with pytest.raises(ValueError):
        space31.vector_battery(PD, "bogus")


def test_zero_current_matches_horizontal(space31, space31_2):
    assert not failures(zero_current_agreement_check(space31, PD))
    assert not failures(zero_current_agreement_check(space31_2, PD))


@pytest.mark.parametrize("ell", [1, 2])
def test_weights(ell):
    space = FunctorSpace(3, 1, ell)
    assert not failures(weight_check(space, PD))


def test_central_charge(space31):
    assert not failures(central_charge_check(space31, PD, space31.generator_battery(PD)))


def test_rotation_identities(space31):
    vectors = space31.generator_battery(PD)
    assert not failures(rotation_identity_check(space31, PD, 1, vectors))


def test_rotation_identities_other_parity():
    pd = standard_parity(2, 3)
    space = FunctorSpace(2, 3, 1)
    assert not failures(rotation_identity_check(space, pd, 1, space.generator_battery(pd)))


def test_tau_hat(space31):
    vectors = space31.generator_battery(tau(PD))
    assert not failures(tau_hat_check(space31, PD, 1, vectors))


def test_psi_well_defined(space31_2):
    assert not failures(psi_well_defined_check(space31_2, PD))


def test_sort_confluence(space31_2):
    results = sort_confluence_check(space31_2, PD, 30, seed=3)
    assert len(results) == 30
    assert not failures(results)


@pytest.mark.parametrize("ell", [1, 2])
def test_bracket_formulas_on_functor(ell):
    space = FunctorSpace(3, 1, ell)
    assert not failures(dj_agreement_functor(space, PD))


def test_plan_cache_misses_logged():
    space = FunctorSpace(3, 1, 1)
    with debug_messages("modules.toroidal") as messages:
        v = space.vector(PD, (2,))
        space.apply(ModeOp("E", 1, 0), v)
        space.apply(ModeOp("E", 1, 0), v)
    assert any(m.startswith("排序方案 (2,)") for m in messages)
    assert sum(m.startswith("作用方案 E1[0] 于 (2,)") for m in messages) == 1
