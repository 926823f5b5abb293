import pytest
from hypothesis import given, strategies as st

from shiftedtab.core import (Letter, ShapeError, Tableau, TableauError, code, conjugate, content_of,
                             destandardize, dual_bar, epsilon_shape, fillings, fmt_letter, fmt_word,
                             parse_letter, parse_partition, partitions, shifted, shifted_tableau,
                             split_tensor, standard_shifted_tableaux, standardize, strict_partitions,
                             tensor_shape, validate, word)

from helpers import strict


def test_letter_codes():
    assert code(1) == 2 and code(1, primed=True) == 1
    assert parse_letter("3'") == 5 and parse_letter("3") == 6
    assert fmt_letter(5) == "3'"
    assert Letter(2, primed=True) < Letter(2) < Letter(3, primed=True)
    assert fmt_word(word("1 2' 2")) == "1 2' 2"


def test_parse_errors_name_the_token():
    with pytest.raises(ShapeError, match="position 2"):
        parse_partition("3,x,1")
    with pytest.raises(ShapeError):
        parse_partition("1,3")
    with pytest.raises(ValueError):
        parse_letter("a")


@given(st.lists(st.integers(1, 9), max_size=5))
def test_partition_text_round_trip(parts):
    p = tuple(sorted(parts, reverse=True))
    assert parse_partition(",".join(map(str, p))) == p


def test_partition_counts():
    # p(n) and the number of partitions of n into distinct parts
    assert [sum(1 for _ in partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert [sum(1 for _ in strict_partitions(n)) for n in range(9)] == [1, 1, 1, 2, 2, 3, 4, 5, 6]


def test_tensor_shape_examples():
    assert tensor_shape((4, 2, 1), (3, 1)) == (4, 3, 3, 1)
    assert tensor_shape((5, 4, 2), (3, 1)) == (4, 3, 3, 3, 2)
    assert tensor_shape((1,), ()) == (1,)
    assert split_tensor((4, 3, 3, 3, 2)) == ((5, 4, 2), (3, 1))
    assert split_tensor((3, 3, 2, 2)) == ((4, 3), (2, 1))
    assert split_tensor((1,)) == ((1,), ())


@given(strict(), strict())
def test_split_inverts_tensor(lam, mu):
    # split is a left inverse exactly when l(mu) is l(lam) or l(lam) - 1
    if len(lam) - len(mu) not in (0, 1):
        return
    assert split_tensor(tensor_shape(lam, mu)) == (lam, mu)


@given(strict(), strict())
def test_tensor_transpose(lam, mu):
    if len(lam) - len(mu) not in (0, 1):
        return
    # transposing turns arms into legs: the diagonal moves from lam to mu
    d = len(lam)
    mu_pad = mu + (0,) * (d - len(mu))
    lam2 = tuple(x + 1 for x in mu_pad)
    mu2 = tuple(x - 1 for x in lam if x > 1)
    assert conjugate(tensor_shape(lam, mu)) == tensor_shape(lam2, mu2)


def test_conjugate():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(()) == ()


def test_epsilon_shapes():
    minus, plus = epsilon_shape((4, 2, 1), "-"), epsilon_shape((4, 2, 1), "+")
    assert minus.size == plus.size == 7
    assert set(minus.cells()) != set(plus.cells())
    assert set(epsilon_shape((3, 2, 1), "-").cells()) == set(epsilon_shape((3, 2, 1), "+").cells())
    assert epsilon_shape((1,), "-").size == 1


def test_validate_shifted():
    T = shifted_tableau([word("1 1 2 3' 3 4 4"), word("3 4' 5 5"), word("5 6 9'")])
    assert validate(T, "SSShYT")
    bad = shifted_tableau([word("1 2"), word("3'")])
    assert not validate(bad, "SSShYT")


def test_content_and_standardization():
    T = shifted_tableau([word("1 2' 3 4'"), word("2 4 5"), word("6")])
    assert content_of(T) == (1, 2, 1, 2, 1, 1)
    assert content_of(shifted_tableau([])) == ()
    S = standardize(T, keep_primes=True)
    assert dual_bar(S).rows == (word("1 2 4' 5"), word("3 6' 7'"), word("8"))
    assert destandardize(S, content_of(T)) == T


def test_destandardize_eps_plus():
    shape = epsilon_shape((4, 3, 1), "+")
    S = Tableau(shape, (word("4"), word("1 7"), word("3 6 8"), word("2 5")))
    got = destandardize(S, (1, 2, 1, 2, 1, 1))
    assert got.rows == (word("3"), word("1 5"), word("2 4 6"), word("2 4"))


def test_standardize_fixes_standard_tableaux():
    for S in standard_shifted_tableaux((4, 2, 1)):
        assert standardize(S) == S


def test_dual_bar_is_an_involution():
    for n in range(1, 8):
        for lam in strict_partitions(n):
            for S in standard_shifted_tableaux(lam):
                assert dual_bar(dual_bar(S)) == S


def test_standardize_round_trip_on_all_fillings():
    for rows in fillings(shifted((3, 1)), None, primes="offdiag", max_value=3):
        T = shifted_tableau(rows)
        assert destandardize(standardize(T, keep_primes=True), content_of(T)) == T


def test_tableau_json_round_trip():
    T = shifted_tableau([word("1 2' 3"), word("3")], (1,))
    assert Tableau.from_json(T.to_json()) == T


def test_bad_rows_are_rejected():
    with pytest.raises((TableauError, ShapeError)):
        shifted_tableau([word("1"), word("2 3")])
