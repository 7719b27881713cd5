# tests/test_superdata.py - 奇偶序列、Cartan 矩阵与 Koszul 符号

import pytest
from hypothesis import given, strategies as st

from modules.superdata import (
    ParityData, cartan, cartan_data, k_eigen_exponent, koszul_sign, m_matrix, mu, node_parity,
    parse_parity, root_pairing, standard_parity, tau, tau_inverse, tau_power, vector_parity
)

S = parse_parity("++--")

parities = st.lists(st.sampled_from([1, -1]), min_size=2, max_size=6).map(
    lambda s: ParityData(s.count(1), s.count(-1), tuple(s)))


def test_parse_parity():
    pd = parse_parity("++-+")
    assert (pd.m, pd.n, pd.kappa) == (3, 1, 4)
    assert pd.to_string() == "++-+"
    assert not pd.is_standard()
    assert standard_parity(3, 1).is_standard()


@pytest.mark.parametrize("text", ["", "+x", "+ -"])
def test_parse_parity_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_parity(text)


def test_parity_data_validation():
    with pytest.raises(ValueError):
        ParityData(2, 1, (1, 1, 1))
    with pytest.raises(ValueError):
        ParityData(1, 1, (1, 0))


def test_periodic_extension():
    assert S.s_at(0) == S.s_at(4) == -1
    assert S.s_at(5) == 1
    assert S.label(5) == 1
    assert S.node(4) == 0


def test_cartan_examples():
    assert cartan(S, 2, 2) == 0
    assert cartan(S, 1, 2) == -1
    assert cartan(S, 1, 1) == 2
    assert cartan(S, 3, 3) == -2
    # 结点 0 是奇结点：s_0 + s_1 = s_4 + s_1 = 0
    assert cartan(S, 0, 0) == 0
    assert cartan(S, 0, 3) == 1


@given(parities)
def test_cartan_matches_root_pairing(pd):
    for i in range(pd.kappa):
        for j in range(pd.kappa):
            assert cartan(pd, i, j) == root_pairing(pd, i, j)
            assert cartan(pd, i, j) == cartan(pd, j, i)


@given(parities)
def test_odd_nodes_have_zero_diagonal(pd):
    for i in range(pd.kappa):
        if node_parity(pd, i):
            assert cartan(pd, i, i) == 0
        else:
            assert cartan(pd, i, i) == 2 * pd.s_at(i)


def test_m_matrix():
    assert m_matrix(S, 2, 1) == S.s_at(2)
    assert m_matrix(S, 1, 2) == -S.s_at(2)
    assert m_matrix(S, 1, 3) == 0
    assert m_matrix(S, 0, 3) == S.s_at(4)


def test_mu():
    assert mu(S, 0) == 0
    assert mu(S, 2) == 2
    assert mu(S, 3) == 1


def test_tau():
    assert tau(S).s == (-1, 1, 1, -1)
    assert tau(standard_parity(3, 1)).s == (-1, 1, 1, 1)
    assert tau_inverse(tau(S)) == S
    assert tau_power(S, 4) == S
    assert tau_power(S, 2) == tau(tau(S))


def test_node_parity():
    assert node_parity(S, 1) == 0
    assert node_parity(S, 2) == 1
    assert node_parity(S, 0) == 1
    assert vector_parity(S, 3) == 1
    assert vector_parity(S, 1) == 0


def test_koszul_sign():
    assert koszul_sign(S, 2, 1, (3, 3)) == 1
    assert koszul_sign(S, 1, 2, (3, 3)) == 1
    assert koszul_sign(S, 2, 2, (3, 3)) == -1
    assert koszul_sign(S, 2, 3, (3, 4, 1)) == 1
    with pytest.raises(IndexError):
        koszul_sign(S, 2, 3, (3, 3))


def test_k_eigen_exponent():
    pd = standard_parity(3, 1)
    assert k_eigen_exponent(pd, 1, (1,)) == 1
    assert k_eigen_exponent(pd, 1, (2,)) == -1
    assert k_eigen_exponent(pd, 0, (4,)) == -1
    assert k_eigen_exponent(pd, 0, (1,)) == -1
    assert k_eigen_exponent(pd, 0, (2, 3)) == 0


def test_cartan_data():
    data = cartan_data(S)
    assert data.cartan[2][2] == 0
    assert data.node_parities == (1, 0, 1, 0)
    assert data.mu_values == (0, 1, 2, 1)
