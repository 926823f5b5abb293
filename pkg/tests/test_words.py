from itertools import permutations, product

from hypothesis import given, settings

from shiftedtab import cli, words
from shiftedtab.core import code, shifted_tableau, standard_shifted_tableaux, strict_partitions, word
from shiftedtab.insertion import mixed_insert
from shiftedtab.ssidt import epsilon_minus_of_word
from shiftedtab.words import (is_lrs_word, is_shifted_yamanouchi, is_yamanouchi, read,
                              rewrite_closure, shifted_plactic_equiv, wread)

from helpers import words as word_strategy


def W(digits: str) -> tuple[int, ...]:
    return tuple(code(int(x)) for x in digits)


def test_read_is_bottom_up():
    S = epsilon_minus_of_word(W("34915513625344"))
    assert read(S) == W("349155136253" "44")
    assert read(shifted_tableau([word("1 2 3")])) == W("123")


def test_wread_example():
    U = shifted_tableau([word("1 1 2' 4'"), word("2 3'"), word("3")])
    assert wread(U) == W("4233211")


@settings(max_examples=100, deadline=None)
@given(word_strategy(alphabet=4, max_size=8))
def test_wread_length(w):
    T = mixed_insert(w).insertion
    assert len(wread(T)) == len(w)


def test_yamanouchi():
    assert is_yamanouchi(W("4233211" "22111"))
    assert is_yamanouchi(W("21")) and not is_yamanouchi(W("12"))
    assert is_yamanouchi(())


def test_shifted_yamanouchi_example():
    ok, table = is_shifted_yamanouchi(W("1221" "31312121"))
    assert ok and table[1] == (1,)
    assert is_shifted_yamanouchi(W("11"))[0]


def test_shifted_yamanouchi_count():
    # words of content lam that are shifted Yamanouchi <-> standard shifted tableaux of shape lam
    for n in range(1, 7):
        for lam in strict_partitions(n):
            letters = [code(i + 1) for i, p in enumerate(lam) for _ in range(p)]
            count = sum(1 for w in set(permutations(letters)) if is_shifted_yamanouchi(w)[0])
            assert count == sum(1 for _ in standard_shifted_tableaux(lam)), lam


def test_lrs_word():
    assert is_lrs_word(word("3 2 1 2 1' 1 1"))[0]
    assert not is_lrs_word(word("1'"))[0]


def test_plactic_relation_example():
    assert shifted_plactic_equiv(W("1243"), W("1423"))
    assert W("1423") in rewrite_closure(W("1243"))
    assert rewrite_closure(W("3")) == {W("3")}
    assert shifted_plactic_equiv(W("213"), W("213"))


def test_plactic_classes_are_mixed_fibres():
    count, bad = cli.check_plactic_fibres(5, 4)
    assert count > 0 and bad == []


@settings(max_examples=100, deadline=None)
@given(word_strategy(alphabet=4, max_size=6))
def test_closure_preserves_insertion(w):
    P = mixed_insert(w).insertion
    assert all(mixed_insert(v).insertion == P for v in rewrite_closure(w))


def test_flipped_relation_is_caught(monkeypatch):
    # break one relation; the fibre check must notice and report a witness
    rel = list(words.RELATIONS)
    left, right, cond = rel[0]
    rel[0] = (left, right[::-1], cond)
    monkeypatch.setattr(words, "RELATIONS", tuple(rel))
    count, bad = cli.check_plactic_fibres(4, 4)
    assert bad
    w, witness = bad[0]
    assert len(w.split()) == 4


def test_dropped_relation_is_caught(monkeypatch):
    monkeypatch.setattr(words, "RELATIONS", words.RELATIONS[1:])
    report = cli.verify_suite(4, ["plactic-fibres"])
    assert not report["ok"]
    assert report["properties"][0]["counterexample"]


def test_exhaustive_closure_small():
    for w in product(range(1, 4), repeat=4):
        w = tuple(code(x) for x in w)
        P = mixed_insert(w).insertion
        for v in rewrite_closure(w):
            assert mixed_insert(v).insertion == P
