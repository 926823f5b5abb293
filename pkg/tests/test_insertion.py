from itertools import permutations, product

import pytest
from hypothesis import given, settings

from shiftedtab.core import code, content_of, ordinary_tableau, shifted_tableau, validate, word
from shiftedtab.insertion import (INSERTIONS, INVERSES, InsertionError, hook_split, mixed_insert,
                                  mixed_inverse, rsk_insert, rsk_inverse, shifted_insert,
                                  sk_insert, sk_reverse_II, sk_row_insert)
from shiftedtab.words import is_yamanouchi, read

from helpers import words


def W(digits: str) -> tuple[int, ...]:
    return tuple(code(int(x)) for x in digits)


def plain(rows, make=ordinary_tableau):
    # bare ints in tableau rows are read as unprimed values
    return make(rows)


def test_single_letter():
    for name, ins in INSERTIONS.items():
        P, Q = ins(W("1"))
        assert P.rows == ((code(1),),) and Q.rows == ((code(1),),), name


def test_rsk_figure_pair():
    w = tuple(code(x) for x in (2, 7, 11, 13, 1, 12, 8, 3, 6, 10, 4, 9, 5))
    P, Q = rsk_insert(w)
    assert P == plain([[1, 3, 4, 5], [2, 6, 8, 9], [7, 10], [11, 12], [13]])
    assert Q == plain([[1, 2, 3, 4], [5, 6, 9, 10], [7, 12], [8, 13], [11]])


def test_rsk_inverse_example():
    P0 = plain([[1] * 5, [2] * 4, [3] * 2, [4]])
    Q = plain([[1, 3, 4, 9, 10], [2, 6, 8, 12], [5, 11], [7]])
    assert rsk_inverse((P0, Q)) == W("4233121" "12211")


def test_mixed_insertion_examples():
    P = mixed_insert(W("34915513625344")).insertion
    assert P.rows == (word("1 1 2 3' 3 4 4"), word("3 4' 5 5"), word("5 6 9'"))
    T = mixed_insert(W("24246153")).insertion
    assert T == shifted_tableau([word("1 2' 3 4'"), word("2 4 5"), word("6")])
    Tbar = mixed_insert(W("41786352")).insertion
    assert Tbar.rows == (word("1 2 4' 5"), word("3 6' 7'"), word("8"))


def test_mixed_inverse_of_kappa_pair():
    P0 = shifted_tableau([word("1 1 1 1 1 1"), word("2 2 2 2"), word("3 3")])
    U = plain([[1, 2, 3, 5, 7, 11], [4, 6, 8, 9], [10, 12]], shifted_tableau)
    assert mixed_inverse((P0, U)) == W("1221" "31312121")


def test_sk_insert_example():
    D = sk_insert(W("41786352")).insertion
    assert D.rows == (W("8652"), W("713"), W("4"))
    assert validate(D, "SSDT")


def test_sk_row_insertion_example():
    # inserting 4 then 3 into the row 533 leaves rows 5433 / 3
    D = sk_insert(W("53343")).insertion
    assert read(D) == W("35433")
    row, bumped = sk_row_insert(W("5334"), code(3))
    assert (row, bumped) == (W("5433"), code(3))


def test_hook_split():
    h = hook_split(W("5433"))
    assert h.decreasing == W("543") and h.increasing == W("3")
    assert hook_split(W("521")).increasing == ()
    with pytest.raises(InsertionError):
        hook_split(W("131"))


def test_sk_reverse_type_two_inverts_a_step():
    # inserting x into a hook word and undoing it returns the word and x
    for n in range(1, 6):
        for w in product(range(1, 4), repeat=n):
            w = tuple(code(x) for x in w)
            try:
                hook_split(w)
            except InsertionError:
                continue
            for x in range(1, 4):
                row, bumped = sk_row_insert(w, code(x))
                if bumped is None:
                    continue
                back, _, z = sk_reverse_II(row, bumped)
                assert (back, z) == (w, code(x)), (w, x)


@pytest.mark.parametrize("name", sorted(INSERTIONS))
def test_round_trips_exhaustive(name):
    ins, inv = INSERTIONS[name], INVERSES[name]
    for n in range(7):
        for w in product(range(1, 4), repeat=n):
            w = tuple(code(x) for x in w)
            assert inv(ins(w)) == w


@settings(max_examples=150, deadline=None)
@given(words(alphabet=5, max_size=9))
def test_round_trips_random(w):
    for name, ins in INSERTIONS.items():
        P, Q = ins(w)
        assert P.shape.outer == Q.shape.outer
        assert INVERSES[name]((P, Q)) == w


def test_haiman_duality():
    for n in range(1, 7):
        for p in permutations(range(1, n + 1)):
            inv = [0] * n
            for i, x in enumerate(p, start=1):
                inv[x - 1] = i
            P, Q = mixed_insert(tuple(code(x) for x in p))
            Ps, Qs = shifted_insert(tuple(code(x) for x in inv))
            assert (P, Q) == (Qs, Ps)


@settings(max_examples=200, deadline=None)
@given(words(alphabet=4, max_size=8))
def test_sk_and_mixed_shapes_agree(w):
    assert sk_insert(w).insertion.shape.outer == mixed_insert(w).insertion.shape.outer


@settings(max_examples=200, deadline=None)
@given(words(alphabet=4, max_size=8))
def test_insertion_tableaux_are_valid(w):
    assert validate(mixed_insert(w).insertion, "SSShYT")
    D = sk_insert(w).insertion
    assert validate(D, "SSDT")
    # decreasing parts of the rows shrink strictly
    parts = [len(hook_split(r).decreasing) for r in D.rows]
    assert all(a > b for a, b in zip(parts, parts[1:]))


def test_yamanouchi_shape_criterion():
    # shape(P_shift(w)) = content(w) exactly for Yamanouchi words
    for n in range(1, 7):
        for w in product(range(1, 4), repeat=n):
            w = tuple(code(x) for x in w)
            c = content_of(w)
            if any(a <= b for a, b in zip(c, c[1:])) or 0 in c:
                continue
            assert (shifted_insert(w).insertion.shape.outer == c) == is_yamanouchi(w), w


def test_unreachable_pair_is_rejected():
    P = shifted_tableau([word("1 2")])
    Q = shifted_tableau([word("2 1")])
    with pytest.raises(Exception):
        mixed_inverse((P, Q))
