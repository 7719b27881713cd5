# tests/test_hecke.py - 双仿射 Hecke 代数正规形

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from modules.hecke import (
    AffinePermutation, DoubleAffineHecke, GeneratorWord, Qw, T, X, Y, check_daha_presentation,
    check_relations, composite, default_battery, random_battery, render_basis, q_conjugation_relations
)
from modules.scalar import ONE, d_pow, derived_params, q_pow

ZETA = derived_params(3, 1)[3]


@pytest.fixture(scope="module")
def h1():
    return DoubleAffineHecke(1, ZETA)


@pytest.fixture(scope="module")
def h2():
    return DoubleAffineHecke(2, ZETA)


@pytest.fixture(scope="module")
def h3():
    return DoubleAffineHecke(3, ZETA)


def test_affine_permutation_basics():
    w = AffinePermutation.identity(2).times_simple(0)
    assert w.window == (0, 3)
    assert w.length() == 1
    assert w.reduced_word() == (0,)
    assert w(3) == 2
    assert AffinePermutation.identity(3).length() == 0


def test_affine_permutation_validation():
    with pytest.raises(ValueError):
        AffinePermutation((1, 3)).validate()
    with pytest.raises(ValueError):
        AffinePermutation((2, 2)).validate()


def test_generator_word_parse():
    gw = GeneratorWord.parse("T1 X2^-1 Q")
    assert gw.tokens == (("T", 1, 1), ("X", 2, -1), ("Q", 0, 1))
    assert str(gw) == "T1 X2^-1 Q"
    assert len(GeneratorWord.parse("T1^2 Y1^-3")) == 5
    assert str(gw.inverse()) == "Q^-1 X2 T1^-1"


@pytest.mark.parametrize("text", ["Z1", "T", "X^2"])
def test_generator_word_rejects_garbage(text):
    with pytest.raises(ValueError):
        GeneratorWord.parse(text)


def test_t_quadratic(h2):
    t1 = h2.element(T(1))
    assert t1 * T(1) == t1.scale(q_pow(2) - 1) + h2.one().scale(q_pow(2))


def test_t_inverse(h2):
    assert h2.element(T(1, -1)) == h2.element(T(1)).scale(q_pow(-2)) + h2.one().scale(q_pow(-2) - 1)
    e = h2.element(Y(2))
    assert (e * T(1)) * T(1, -1) == e


def test_t_index_out_of_range(h2):
    with pytest.raises(IndexError):
        h2.right_mul_T(h2.one(), 2)
    with pytest.raises(IndexError):
        h2.right_mul_Y(h2.one(), 3)


def test_y_merges(h3):
    assert h3.element(Y(1)) == h3.basis(mu=(1, 0, 0))
    assert h3.element(Y(1) + Y(1, -1)) == h3.one()
    assert h3.element(Y(1) + Y(2) + Y(1)) == h3.basis(mu=(2, 1, 0))


def test_q_rotation(h1, h2):
    assert h2.element(Y(2) + Qw(1)) == h2.basis(k=1, mu=(1, 0))
    assert h1.element(Y(1) + Qw(1)) == h1.basis(k=1, mu=(1,), coeff=ZETA.inverse())
    assert h2.element(Qw(1) + Qw(-1)) == h2.one()


def test_x_letters(h1, h2):
    # ℓ = 1 时 X₁ = Q
    assert h1.element(Y(1) + X(1)) == h1.basis(k=1, mu=(1,), coeff=ZETA.inverse())
    assert h2.element(X(1) + X(1, -1)) == h2.one()
    assert h2.element(X(1) + X(2)) == h2.element(X(2) + X(1))


def test_composites(h3):
    assert composite("T_range_up", 3, 1, 1) == T(1)
    assert composite("Pr", 3, 1) == composite("Qij", 3, 2, 2) + composite("Qij", 3, 1, 1)
    assert h3.element(composite("Qij", 3, 1, 2)) == h3.basis(k=1)
    with pytest.raises(ValueError):
        composite("Pr", 3, 3)
    with pytest.raises(ValueError):
        composite("Qij", 3, 2, 1)


def test_render_basis(h2):
    (key, coeff), = h2.element(T(1) + Y(2, -1)).sorted_items()[:1]
    assert render_basis(key).startswith("Q^0 * T[")
    assert str(h2.one()) == "(1) * Q^0 * T[1,2] * Y^(0,0)"


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_presentation_on_unit(ell):
    results = check_daha_presentation(ell, ZETA)
    failures = [e for e in results if e["status"] != "pass"]
    assert not failures, failures[:3]


def test_presentation_formal_zeta():
    results = check_daha_presentation(2, d_pow(1))
    assert all(e["status"] == "pass" for e in results)


def test_presentation_default_battery(h2):
    results = check_daha_presentation(2, ZETA, default_battery(h2), h2)
    assert all(e["status"] == "pass" for e in results)
    assert {"X0Y1", "XYXY", "T-braid"} - {e["relation"] for e in results} == {"T-braid"}


def test_presentation_limit():
    with pytest.raises(ValueError):
        check_daha_presentation(5, ZETA)


def test_q_conjugation_identities(h2):
    battery = random_battery(h2, seed=7, count=5)
    results = check_relations(h2, q_conjugation_relations(2, ZETA), battery)
    assert len(results) == 2 * 5
    assert all(e["status"] == "pass" for e in results)


def test_coset_reduce(h2):
    chi = q_pow(2)
    chars = ((1, chi),)
    assert h2.coset_reduce(h2.element(T(1)), chars) == h2.one().scale(chi)
    # Y₁T₁ = T₁Y₂ + (q²-1)Y₁ 经陪集约化后为 χ·Y₁
    assert h2.coset_reduce(h2.element(Y(1) + T(1)), ((1, -ONE),)) == h2.element(Y(1)).scale(-1)
    assert h2.coset_reduce(h2.element(Y(2)), chars) == h2.element(Y(2))
    assert h2.coset_reduce(h2.element(T(1)), ()) == h2.element(T(1))


tokens_2 = st.one_of(
    st.tuples(st.sampled_from(["X", "Y"]), st.integers(1, 2), st.sampled_from([1, -1])),
    st.tuples(st.just("T"), st.just(1), st.sampled_from([1, -1])),
    st.tuples(st.just("Q"), st.just(0), st.sampled_from([1, -1])),
)
words_2 = st.lists(tokens_2, max_size=4).map(lambda ts: GeneratorWord(tuple(ts)))


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(words_2, words_2)
def test_associativity(h2, u, v):
    assert h2.multiply(h2.element(u), h2.element(v)) == h2.element(u + v)
