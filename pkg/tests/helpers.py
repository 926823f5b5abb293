"""Small parsers shared by the tests: compact signed sums such as
"P542*P31 - P5*P4321" and matrix cells such as "-Q32" or "Q42/21"."""

import re
from hypothesis import strategies as st

from shiftedtab.core import code
from shiftedtab.giambelli import SignedTermSum

_FACTOR = re.compile(r"(S_hat|[A-Za-z])(\d+)(?:/(\d+))?")


def _factor(tok: str):
    m = _FACTOR.fullmatch(tok)
    b, outer, inner = m.group(1), m.group(2), m.group(3) or ""
    return (b, tuple(map(int, outer)), tuple(map(int, inner)))


def expr(s: str, pow2: int = 0) -> SignedTermSum:
    coeffs: dict = {}
    for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", s.replace(" ", "")):
        c, factors = 1, []
        for tok in body.split("*"):
            if tok.isdigit():
                c *= int(tok)
            else:
                factors.append(_factor(tok))
        mono = tuple(sorted(factors))
        coeffs[mono] = coeffs.get(mono, 0) + (-c if sign == "-" else c)
    return SignedTermSum.build(coeffs, pow2)


def matrix(rows: str) -> list[list[SignedTermSum]]:
    out = []
    for line in rows.strip().splitlines():
        out.append([SignedTermSum() if c == "0" else expr(c) for c in line.split()])
    return out


def same(a: SignedTermSum, b: SignedTermSum) -> bool:
    return a.pow2 == b.pow2 and a.coefficients() == b.coefficients()


def words(alphabet: int = 4, max_size: int = 7):
    return st.lists(st.integers(1, alphabet), max_size=max_size).map(
        lambda w: tuple(code(x) for x in w))


def strict(max_part: int = 6):
    return st.sets(st.integers(1, max_part), max_size=4).map(
        lambda s: tuple(sorted(s, reverse=True)))
