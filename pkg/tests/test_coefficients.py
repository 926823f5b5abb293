import random

import pytest

from shiftedtab import coefficients as co
from shiftedtab.core import ShapeError, partitions, strict_partitions
from shiftedtab.symfunc import basis, expand_in_basis


# ----------------------------------------------------------------- golden

def test_b_golden():
    assert co.coeff_b((3, 2), (4, 2, 1), (5, 4, 2, 1)) == 9
    assert co.oracle("b", (3, 2), (4, 2, 1), (5, 4, 2, 1)) == 9


def test_h_golden():
    assert co.coeff_h((4, 2, 1), (3, 2, 1), (5, 4, 3, 1)) == 464
    assert co.coeff_h((4, 2, 1), (3, 2, 1), (5, 4, 3, 1), pairs=True) == 29


@pytest.mark.parametrize("lam, mu, nu, want", [
    ((6, 4, 2), (5, 2), (7, 5, 4, 2, 1), 10),
    ((5, 3), (3, 1), (6, 4, 2), 4),
])
def test_d_golden(lam, mu, nu, want):
    assert co.coefficient("d", lam, mu, nu) == want
    assert co.lrs_d_alt_ssidt(lam, mu, nu) == want
    assert co.lrs_d_remmel_whitney(lam, mu, nu) == want


def test_d_golden_oracle():
    assert co.oracle("d", (5, 3), (3, 1), (6, 4, 2)) == 4


# ---------------------------------------------------------------- trivial

def test_trivial_values():
    assert co.lrs_d((3, 1), (), (3, 1)) == 1
    assert co.lr_a((2, 1), (), (2, 1)) == 1
    assert co.lr_a((1,), (1,), (2,)) == co.lr_a((1,), (1,), (1, 1)) == 1
    assert co.lrs_d((1,), (1,), (2,)) == 1
    # sizes that do not add up are rejected
    with pytest.raises(ShapeError):
        co.lr_a((1,), (1,), (3,))


def test_single_row_b():
    for n in range(1, 6):
        for lam in strict_partitions(n):
            want = expand_in_basis(basis("P", lam, n), "s")
            for g in partitions(n):
                assert co.b_single(lam, g) == want.get(g, 0)


# ----------------------------------------------------------- vs the oracle

@pytest.mark.parametrize("family", ["a", "b", "e", "f", "h"])
@pytest.mark.parametrize("size", range(1, 6))
def test_family_matches_oracle(family, size):
    count, bad = co.check_family(family, size)
    assert count > 0 and bad == []


def test_d_stembridge_matches_oracle():
    for n in range(1, 7):
        for lam, mu, nu in co.instances("d", n):
            assert co.lrs_d(lam, mu, nu) == co.oracle("d", lam, mu, nu)


def test_e_rules_agree():
    for lam, mu, alpha in co.instances("e", 5):
        assert co.coeff_e(lam, mu, alpha) == co.coeff_e_yamanouchi(lam, mu, alpha)


def test_skew_expand():
    assert co.skew_expand("s", (2, 1), (1,)) == {(2,): 1, (1, 1): 1}
    assert co.skew_expand("Q", (3, 1), (1,)) == {(3,): 1, (2, 1): 1}


def test_random_size_seven():
    rng = random.Random(11)
    for family in "abefh":
        inst = list(co.instances(family, 7))
        for left, right, out in rng.sample(inst, min(20, len(inst))):
            assert co.coefficient(family, left, right, out) == co.oracle(family, left, right, out)


# ------------------------------------------------------ known disagreements

def test_c_rule_undercounts_known_case():
    # the weak-Yamanouchi rule gives 2 where the product has 4
    assert co.all_rules("c", (), (3, 3), (2, 2, 2)) == {"weak-yamanouchi": 2, "oracle": 4}
    assert co.check_family("c", 6)[1] == [
        ((), (3, 3), (2, 2, 2), {"weak-yamanouchi": 2}, 4),
        ((), (3, 3), (2, 2, 1, 1), {"weak-yamanouchi": 2}, 4)]


def test_g_rule_known_cases():
    bad = co.check_family("g", 6)[1]
    assert len(bad) == 4
    assert all(row[3] == {"weak-yamanouchi": 2} and row[4] == 4 for row in bad)


def test_ppp1_overcounts_known_case():
    vals = co.all_rules("d", (3,), (), (2, 1))
    assert vals["ppp1"] == 1 and vals["oracle"] == vals["stembridge"] == 0


def test_d_rules_disagree_only_in_ppp1():
    for n in range(1, 7):
        for lam, mu, nu, vals in co.check_d_rules(n)[1]:
            others = {k: v for k, v in vals.items() if k != "ppp1"}
            assert len(set(others.values())) == 1, (lam, mu, nu)
