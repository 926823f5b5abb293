from itertools import product

import pytest
from hypothesis import given, settings

from shiftedtab.core import (TableauError, code, content_of, fillings, shifted, shifted_tableau,
                             strict_partitions, validate, word)
from shiftedtab.insertion import mixed_insert, sk_insert
from shiftedtab.ssidt import (bend_to_fixpoint, epsilon_minus_of_word, epsilon_plus_minus_transfer,
                              initial_path, is_ssidt, path_word, shifted_to_epsilon_plus,
                              ssdt_to_epsilon_minus)
from shiftedtab.words import read

from helpers import words


def W(digits: str) -> tuple[int, ...]:
    return tuple(code(int(x)) for x in digits)


@pytest.fixture
def D():
    return shifted_tableau([word("9 6 5 2 3 4 4"), word("5 1 1 3"), word("3 4 5")])


def test_first_path(D):
    path = bend_to_fixpoint(D, initial_path(D))
    assert path_word(D, path) == W("3112344")


def test_ssdt_to_epsilon_minus(D):
    S = ssdt_to_epsilon_minus(D)
    assert S.shape.kind == "eps-" and S.shape.outer == (7, 4, 3)
    assert S.rows == tuple(W(r) for r in ("4", "4", "3", "25", "136", "155", "349"))
    # anti-diagonals read back the three removed paths
    diag: dict[int, list] = {}
    for r, c, v in sorted(S.cells(), key=lambda t: -t[0]):
        diag.setdefault(r + c, []).append(v)
    got = sorted(map(tuple, diag.values()), key=len, reverse=True)
    assert got == [W("3112344"), W("4535"), W("956")]


def test_reading_word_inserts_to_the_example(D):
    S = ssdt_to_epsilon_minus(D)
    P = mixed_insert(read(S)).insertion
    assert P.rows == (word("1 1 2 3' 3 4 4"), word("3 4' 5 5"), word("5 6 9'"))
    assert is_ssidt(S)


def test_epsilon_plus_example():
    T = shifted_tableau([word("1 2' 3 4'"), word("2 4 5"), word("6")])
    S = shifted_to_epsilon_plus(T)
    assert S.shape.kind == "eps+" and S.shape.outer == (4, 3, 1)
    assert S.rows == (W("3"), W("15"), W("246"), W("24"))
    assert read(S) == W("24246153")
    assert mixed_insert(read(S)).insertion == T
    assert is_ssidt(S)


def test_epsilon_minus_of_word_example():
    S = epsilon_minus_of_word(W("41786352"))
    assert S.rows == (W("2"), W("35"), W("16"), W("478"))


def test_rejects_bad_input():
    with pytest.raises(TableauError):
        shifted_to_epsilon_plus(shifted_tableau([word("2 1")]))


@settings(max_examples=120, deadline=None)
@given(words(alphabet=4, max_size=8))
def test_epsilon_minus_recovers_mixed_tableau(w):
    S = epsilon_minus_of_word(w)
    assert S.shape.outer == sk_insert(w).insertion.shape.outer
    assert content_of(S) == content_of(w)
    assert mixed_insert(read(S)).insertion == mixed_insert(w).insertion
    assert is_ssidt(S)


def test_epsilon_plus_recovers_every_small_tableau():
    for n in range(1, 6):
        for lam in strict_partitions(n):
            for rows in fillings(shifted(lam), None, primes="offdiag", max_value=3):
                T = shifted_tableau(rows)
                if not validate(T, "SSShYT"):
                    continue
                S = shifted_to_epsilon_plus(T)
                assert S.shape.outer == lam and content_of(S) == content_of(T)
                assert mixed_insert(read(S)).insertion == T, rows


def test_transfer_round_trip():
    for w in product(range(1, 4), repeat=5):
        w = tuple(code(x) for x in w)
        S = epsilon_minus_of_word(w)
        plus = epsilon_plus_minus_transfer(S)
        assert plus.shape.kind == "eps+"
        assert epsilon_plus_minus_transfer(plus) == S
