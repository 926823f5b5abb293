from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from shiftedtab.core import partitions, strict_partitions
from shiftedtab.symfunc import (DegreeError, ResidueError, TruncatedSymPoly, basis,
                                count_tableaux, expand_in_basis, from_expansion, multiply)


def test_s_hat_of_one_box():
    assert basis("S_hat", (1,), 3) == basis("P", (1,), 3).scale(2)


def test_single_variable_values():
    # s_(n)(x) = x^n; q_n(x) = 2 x^n
    assert basis("s", (3,), 1).evaluate([2]) == 8
    assert basis("q", 3, 1).evaluate([2]) == 16
    assert basis("s", (2, 1), 1).is_zero()


def test_schur_product():
    s1 = basis("s", (1,), 4)
    assert s1 * s1 == basis("s", (2,), 4) + basis("s", (1, 1), 4)


def test_q_functions_are_pfaffians_of_q():
    # Q_(a,b) = q_a q_b + 2 sum (-1)^k q_{a+k} q_{b-k}
    m = 6
    q = lambda n: basis("q", n, m, 5) if n > 0 else TruncatedSymPoly(m, 5, {(): 1})
    want = q(3) * q(2) - 2 * (q(4) * q(1)) + 2 * (q(5) * q(0))
    assert basis("Q", (3, 2), m) == want


@pytest.mark.parametrize("n", range(1, 6))
def test_expand_basis_elements(n):
    for g in partitions(n):
        assert expand_in_basis(basis("s", g, n)) == {g: 1}
    for lam in strict_partitions(n):
        assert expand_in_basis(basis("Q", lam, n), "P") == {lam: 2 ** len(lam)}


def test_expand_rejects_residue():
    with pytest.raises(ResidueError):
        expand_in_basis(basis("s", (1, 1), 2), "P")


def test_degree_guard():
    with pytest.raises(DegreeError):
        basis("s", (3,), 2, 2)


def test_count_tableaux_kostka():
    # K_{(2,1),(1,1,1)} = 2 standard tableaux
    assert count_tableaux("s", (2, 1), (), (1, 1, 1)) == 2
    assert count_tableaux("s", (2, 1), (1,), (1, 1)) == 2


def test_from_expansion_round_trip():
    f = multiply(basis("P", (2, 1), 5), basis("P", (2,), 5))
    assert from_expansion(expand_in_basis(f, "P"), "P", 5, 5) == f


def test_skew_schur_is_sum():
    # s_{(2,1)/(1)} = s_2 + s_11
    assert basis("s", ((2, 1), (1,)), 3) == basis("s", (2,), 3) + basis("s", (1, 1), 3)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(1,), (2,), (1, 1), (2, 1)]),
       st.sampled_from([(1,), (2,), (1, 1)]),
       st.sampled_from([(1,), (2,)]))
def test_product_is_associative(a, b, c):
    m = sum(a) + sum(b) + sum(c)
    x, y, z = (basis("s", p, m, m) for p in (a, b, c))
    assert (x * y) * z == x * (y * z)


def test_exact_fractions():
    f = basis("P", (1,), 2).scale(Fraction(1, 2))
    assert f.evaluate([1, 1]) == 1
