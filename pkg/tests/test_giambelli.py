import random
from fractions import Fraction

import pytest

from shiftedtab import giambelli as gi
from shiftedtab.core import partitions, strict_partitions, sub_partitions, tensor_shape
from shiftedtab.symfunc import basis, multiply, scale

from helpers import expr, matrix, same


# ---------------------------------------------------------------- machinery

def test_pfaffian_small_cases():
    assert gi.pfaffian([[0, 5], [-5, 0]]) == 5
    assert gi.pfaffian([]) == 1


def test_pfaffian_squared_is_determinant():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.choice((2, 4, 6))
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                M[i][j] = rng.randint(-5, 5)
                M[j][i] = -M[i][j]
        pf = gi.pfaffian(M)
        assert pf * pf == gi.determinant(M)
        assert pf == gi.pfaffian_by_matchings(M)


def test_pfaffian_rejects_non_antisymmetric():
    with pytest.raises(ValueError):
        gi.pfaffian([[0, 1], [1, 0]])


def test_determinant_of_signed_sums_matches_evaluation():
    M = gi.s_hat_det_matrix((3, 2, 1), (1,))
    assert gi.determinant(gi.evaluate_matrix(M, 6, 5)) == gi.determinant(M).evaluate(6, 5)


def test_signed_sum_arithmetic():
    a, b = expr("P2*P1"), expr("P3")
    assert same(a + b - b, a)
    assert (a - a).is_zero()
    assert same(a * gi.ONE, a)
    assert (a * gi.ZERO).is_zero()


# ----------------------------------------------------------- non-skew forms

def test_p_pfaffian_for_421():
    assert gi.skew_p_pfaffian((4, 2, 1), (), 7) == basis("P", (4, 2, 1), 7)


@pytest.mark.parametrize("lam, mu, m", [((4, 2), (1,), 6), ((5, 3, 1), (3, 1), 5)])
def test_skew_p_pfaffian(lam, mu, m):
    assert gi.skew_p_pfaffian(lam, mu, m) == basis("P", (lam, mu), m)


def test_literal_p_entries_fail_on_small_shape():
    # the Pfaffian with P entries is not P_{lam/mu} in general
    assert gi.skew_p_pfaffian((2, 1), (1,), 3, entries="P") != basis("P", ((2, 1), (1,)), 3)


def test_s_hat_det_single_row():
    assert gi.s_hat_det((4,), (), 4) == basis("q", 4, 4)
    assert gi.s_hat_det((2,), (), 3) == gi.s_hat_enumeration((2,), (), 3)


def test_sinpp_three_expressions():
    lam, mu = (5, 4, 2), (3, 1)
    assert tensor_shape(lam, mu) == (4, 3, 3, 3, 2)
    plus = expr("P542*P31 + P5*P4321 - P4*P5321 - P2*P5431", 3)
    minus = expr("P42*P531 - P52*P431 - P54*P321 + P54321", 3)
    second = expr("P542*P31 - P5432*P1 - P5421*P3 + P54321", 3)
    assert same(gi.s_hat_as_PP(lam, mu, "S1plus"), plus)
    assert same(gi.s_hat_as_PP(lam, mu, "S1minus"), minus)
    assert same(gi.s_hat_as_PP(lam, mu, "S2"), second)


def test_sinpp_square_corollary():
    for lam in [(3, 1), (4, 2, 1)]:
        m = 2 * sum(lam)
        lhs = gi.s_hat_enumeration(tensor_shape(lam, lam), (), m)
        P = basis("P", lam, m)
        assert lhs == scale(multiply(P, P), 2 ** len(lam))


def test_perfect_matchings_example():
    found = sorted((pm.crossings(), pm.sign()) for pm, _ in gi.matchings((5, 4, 3), (4, 2)))
    assert found == sorted([(0, 1), (2, 1), (1, -1), (1, -1)])
    want = expr("P5*P42*P43 + P54*P42*P3 - P52*P4*P43 - P54*P4*P32", 3)
    assert same(gi.s_hat_perfect_matchings((5, 4, 3), (4, 2)), want)
    assert same(gi.s_hat_as_PP((5, 4, 3), (4, 2), "S2"), expr("P543*P42 - P4*P5432", 3))


def test_pp_in_s_hat_example():
    want = expr("-S_hat3322 + S_hat4321 + S_hat4411 + S_hat532 + S_hat541 - S_hat55", -4)
    assert same(gi.pp_as_s_hat((4, 1), (3, 2)), want)


def test_pp_in_s_hat_square():
    s = gi.pp_as_s_hat((2, 1), (2, 1))
    assert s.evaluate(6, 6) == multiply(basis("P", (2, 1), 6), basis("P", (2, 1), 6))


def test_giambelli_det_matrix_example():
    # the displayed matrix has -4P[(3,2)] in the corner; the value that makes
    # the identity hold is -P[(3,2)]
    want = matrix("""
        P43 P41 P4
        0   P31 P3
        -P32 P21 P2""")
    got = gi.giambelli_matrix((4, 3, 2), (3, 1))
    assert all(same(g, w) for gr, wr in zip(got, want) for g, w in zip(gr, wr))
    alpha = (4, 3, 3, 3)
    assert gi.giambelli_det((4, 3, 2), (3, 1), 13) == gi.s_hat_enumeration(alpha, (), 13)


def test_giambelli_det_with_printed_entry_is_wrong():
    M = gi.giambelli_matrix((4, 3, 2), (3, 1))
    M[2][0] = expr("-4*P32")
    det = gi.determinant(gi.evaluate_matrix(M, 6, 13))
    assert scale(det, 8) != gi.s_hat_enumeration((4, 3, 3, 3), (), 6)


def test_giambelli_pf_example():
    A, signs = gi.signed_sequence((4, 3, 2), (3, 1))
    assert A == (4, 3, 3, 2, 1, 0)
    assert signs == (1, 1, -1, 1, -1, -1)
    want = matrix("""
        0 0 P43 0 P41 P4
        0 0 0 0 P31 P3
        -P43 0 0 P32 0 0
        0 0 -P32 0 P21 P2
        -P41 -P31 0 -P21 0 0
        -P4 -P3 0 -P2 0 0""")
    got = gi.giambelli_pf_matrix((4, 3, 2), (3, 1))
    assert all(same(g, w) for gr, wr in zip(got, want) for g, w in zip(gr, wr))
    assert gi.giambelli_pf((4, 3, 2), (3, 1), 6) == gi.s_hat_enumeration((4, 3, 3, 3), (), 6)


def test_giambelli_base_cases():
    for n in range(1, 5):
        assert gi.giambelli_det((n,), (), n) == basis("S_hat", (n,), n)
        assert gi.giambelli_pf((n,), (), n) == basis("S_hat", (n,), n)


# ---------------------------------------------------------------- skew forms

def test_skew_qq_example():
    alpha, beta = (4, 3, 2, 1), (2, 2)
    assert same(gi.skew_s_hat_as_QQ(alpha, beta, "eq1"), expr("Q42/21*Q31/1"))
    # the third term carries Q_{(1)/(1)} = 1
    want = expr("Q42/21*Q31/1 + Q42/1*Q31/21 + Q432/21 + Q421/21*Q3/1", -1)
    assert same(gi.skew_s_hat_as_QQ(alpha, beta, "eq2"), want)
    assert gi.s_hat_det(alpha, beta, 6) == gi.s_hat_enumeration(alpha, beta, 6)
    assert gi.skew_s_hat_as_QQ(alpha, beta, "eq1").evaluate(6, 6) == gi.s_hat_det(alpha, beta, 6)


def test_skew_qq_reduces_to_sinpp():
    alpha = tensor_shape((4, 2), (3, 1))
    assert gi.skew_s_hat_as_QQ(alpha, (), "eq1").evaluate(6, 10) == gi.s_hat_enumeration(alpha, (), 6)


def test_skew_matchings_example():
    want = expr("Q3*Q3*Q3*Q21 - Q1*Q3*Q5*Q21 + Q1*Q3*Q3*Q32 - Q1*Q3*Q3*Q41"
                "+ Q1*Q1*Q5*Q41 + Q1*Q1*Q3*Q43 - Q1*Q1*Q3*Q52 + Q1*Q1*Q1*Q54", -1)
    assert same(gi.skew_s_hat_matchings((5, 4, 3, 2, 1), (2, 1)), want)


def test_skew_det_example():
    want = matrix("""
        Q43 Q41 Q4 Q3
        -Q32 Q21 Q2 Q1
        -Q3 -Q1 1 0
        -Q3 -Q1 -1 0""")
    M = gi.skew_giambelli_matrix((4, 3, 2, 1), (1,))
    assert all(same(g, w) for gr, wr in zip(M, want) for g, w in zip(gr, wr))
    ref = gi.s_hat_enumeration((4, 3, 2, 1), (1,), 6)
    assert scale(gi.determinant(gi.evaluate_matrix(M, 6, 10)), Fraction(1, 4)) == ref
    assert gi.skew_giambelli_det((4, 3, 2, 1), (1,), 6) == ref


def test_skew_pf_example():
    A, _, B, _ = gi.skew_signed_sequences((4, 3, 2, 1), (1,))
    assert A == (4, 3, 2, 1, 0, 0) and B == (1, 0)
    want = matrix("""
        0 Q43 0 Q41 0 Q4 Q3 0
        -Q43 0 Q32 0 Q3 0 0 Q3
        0 -Q32 0 Q21 0 Q2 Q1 0
        -Q41 0 -Q21 0 Q1 0 0 Q1
        0 -Q3 0 -Q1 0 1 0 0
        -Q4 0 -Q2 0 -1 0 0 1
        -Q3 0 -Q1 0 0 0 0 0
        0 -Q3 0 -Q1 0 -1 0 0""")
    M = gi.skew_giambelli_pf_matrix((4, 3, 2, 1), (1,))
    assert all(same(g, w) for gr, wr in zip(M, want) for g, w in zip(gr, wr))
    ref = gi.s_hat_enumeration((4, 3, 2, 1), (1,), 6)
    assert scale(gi.pfaffian(gi.evaluate_matrix(M, 6, 10)), Fraction(-1, 4)) == ref
    assert gi.skew_giambelli_pf((4, 3, 2, 1), (1,), 6) == ref


def test_skew_forms_degenerate_to_non_skew():
    for alpha in [(2, 1), (3, 3, 1), (4, 3, 3, 3)]:
        ref = gi.s_hat_enumeration(alpha, (), 6)
        assert gi.skew_giambelli_det(alpha, (), 6) == ref
        assert gi.skew_giambelli_pf(alpha, (), 6) == ref


def test_qq_identities():
    assert gi.qq_expansion_identities((4, 2), (1,), 6) == {"QQ1": True, "QQ2": True}
    with pytest.raises(gi.FormulaError):
        gi.qq_expansion_identities((4, 2), ())


def test_qq_identities_random():
    rng = random.Random(3)
    pool = [(lam, mu) for n in range(2, 9) for lam in strict_partitions(n)
            for mu in sub_partitions(lam, strict=True) if mu and mu != lam]
    for lam, mu in rng.sample(pool, 25):
        assert all(gi.qq_expansion_identities(lam, mu).values()), (lam, mu)


def test_all_formulas_agree_up_to_six():
    for n in range(1, 7):
        for alpha in partitions(n):
            for beta in sub_partitions(alpha):
                assert gi.disagreements(alpha, beta) == [], (alpha, beta)


def test_evaluate_uses_exact_powers_of_two():
    s = expr("P1", -1)
    assert s.evaluate(2, 1) == scale(basis("P", (1,), 2), Fraction(1, 2))
