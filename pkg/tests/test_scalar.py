# tests/test_scalar.py - 系数环与 ψ 级数

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import debug_messages
from modules.scalar import (
    ONE, ZERO, Scalar, d_pow, derived_params, psi_coeffs, psi_series, q_pow, qint, specialize
)

scalars = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    st.integers(-5, 5),
    max_size=4,
).map(Scalar)


def test_qint_small_values():
    assert qint(0) == ZERO
    assert qint(1) == ONE
    assert qint(2) == q_pow(1) + q_pow(-1)
    assert qint(3) == q_pow(2) + 1 + q_pow(-2)
    assert qint(-2) == -(q_pow(1) + q_pow(-1))


def test_derived_params():
    q1, q2, q3, zeta = derived_params(3, 1)
    assert q1 * q2 * q3 == ONE
    assert zeta == Scalar.monomial(q=2, d=-2)
    assert derived_params(2, 3)[3] == Scalar.monomial(q=-1, d=1)


def test_derived_params_rejects_equal_ranks():
    with pytest.raises(ValueError):
        derived_params(2, 2)


def test_specialize():
    assert specialize(q_pow(1) + q_pow(-1), 2, 3) == Fraction(5, 2)
    assert specialize(ONE, 7, 5) == 1
    assert specialize(derived_params(3, 1)[3], 2, 3) == Fraction(4, 9)


def test_specialize_half_powers():
    half = Scalar.monomial(q=Fraction(1, 2))
    assert specialize(half, 4, 3) == 2
    with pytest.raises(ValueError):
        specialize(half, 2, 3)


def test_specialize_rejects_roots_of_unity():
    with pytest.raises(ValueError):
        specialize(q_pow(1), -1, 3)
    with pytest.raises(ValueError):
        specialize(q_pow(1), 2, 0)


def test_text_form():
    x = Scalar.monomial(q=-1, d=2, coeff=-1) + Scalar.monomial(q=2, coeff=3)
    assert str(x) == "-1*q^-1*d^2 + 3*q^2"
    assert Scalar.parse(str(x)) == x
    assert str(ZERO) == "0"
    assert Scalar.parse("0") == ZERO


def test_text_form_half_exponent():
    x = Scalar.monomial(q=Fraction(1, 2), d=Fraction(-3, 2), coeff=Fraction(2, 3))
    assert str(x) == "2/3*q^{1/2}*d^{-3/2}"
    assert Scalar.parse(str(x)) == x


def test_inverse():
    x = Scalar.monomial(q=1, d=-2, coeff=3)
    assert x * x.inverse() == ONE
    with pytest.raises(ValueError):
        (q_pow(1) + 1).inverse()


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.terms = {}


def test_psi_series_leading_terms():
    q, qi = q_pow(1), q_pow(-1)
    assert psi_coeffs(1, "-", 1) == [q]
    assert psi_coeffs(1, "+", 3) == [qi, qi - q, qi - q]
    assert psi_coeffs(1, "-", 3) == [q, q - qi, q - qi]


@pytest.mark.parametrize("r", [-2, -1, 0, 1, 3])
def test_psi_limits_are_inverse(r):
    assert psi_series(r, "+")[0] * psi_series(r, "-")[0] == ONE


@pytest.mark.parametrize("c", [-1, 1, 2])
def test_psi_reflection(c):
    # ψ_{-c}(1/u) = ψ_c(u)
    assert psi_coeffs(-c, "+", 8) == psi_coeffs(c, "-", 8)


def test_psi_series_rejects_negative_index():
    with pytest.raises(IndexError):
        psi_series(1, "+")[-1]
    with pytest.raises(ValueError):
        psi_series(1, "*")


@given(scalars, scalars, scalars)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO


@settings(max_examples=50)
@given(scalars, scalars)
def test_specialize_is_a_ring_homomorphism(x, y):
    # q0 = 4, d0 = 9 使半整数次幂也有有理值
    assert specialize(x * y, 4, 9) == specialize(x, 4, 9) * specialize(y, 4, 9)
    assert specialize(x + y, 4, 9) == specialize(x, 4, 9) + specialize(y, 4, 9)


@given(scalars)
def test_text_form_round_trip(x):
    assert Scalar.parse(str(x)) == x


def test_monomial_powers():
    x = d_pow(1) * q_pow(-1)
    assert x ** 3 == Scalar.monomial(q=-3, d=3)
    assert x ** -2 == Scalar.monomial(q=2, d=-2)
    assert (q_pow(1) + 1) ** 2 == q_pow(2) + q_pow(1) * 2 + 1


def test_constant_hash_matches_number():
    assert hash(Scalar.const(3)) == hash(3)
    assert hash(Scalar.const(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert hash(ZERO) == hash(0)
    assert {Scalar.const(3): 1}[3] == 1
    assert {3: "x"}[Scalar.const(3)] == "x"
    assert len({Scalar.const(2), 2, q_pow(1)}) == 2


def test_psi_series_cache_miss_logged():
    with debug_messages("modules.scalar") as messages:
        first = psi_series(41, "-")
        second = psi_series(41, "-")
    assert first is second
    assert messages.count("psi_series 缓存未命中: r=41, 方向 -") == 1
