"""Determinant, Pfaffian and perfect matching formulas for S_hat functions,
and the conversions between S_hat and products of P functions.

Every formula comes in a symbolic form (a SignedTermSum or a matrix of
them) and is evaluated through symfunc on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Mapping, Sequence

from .core import Partition, ShapeError, contains, split_tensor, tensor_shape
from .symfunc import TruncatedSymPoly, basis, constant, multiply

Factor = tuple[str, Partition, Partition]
Monomial = tuple[Factor, ...]


class FormulaError(ValueError):
    pass


# ------------------------------------------------------------ term sums

@dataclass(frozen=True)
class SignedTermSum:
    """2^pow2 * sum of coefficient * product of basis elements.

    A factor is (basis, outer, inner) with basis one of q, P, Q, S_hat; q
    factors use outer = (n,).  Monomials keep their factors sorted."""
    terms: tuple[tuple[int, Monomial], ...] = ()
    pow2: int = 0

    @staticmethod
    def build(coeffs: Mapping[Monomial, int], pow2: int = 0) -> "SignedTermSum":
        items = sorted((tuple(sorted(mono)), c) for mono, c in coeffs.items())
        merged: dict[Monomial, int] = {}
        for mono, c in items:
            merged[mono] = merged.get(mono, 0) + c
        return SignedTermSum(tuple((c, mono) for mono, c in merged.items() if c), pow2)

    def coefficients(self) -> dict[Monomial, int]:
        return {mono: c for c, mono in self.terms}

    def _aligned(self, other: "SignedTermSum") -> tuple[dict, dict, int]:
        p = min(self.pow2, other.pow2)
        a = {mono: c << (self.pow2 - p) for c, mono in self.terms}
        b = {mono: c << (other.pow2 - p) for c, mono in other.terms}
        return a, b, p

    def __add__(self, other):
        if isinstance(other, int):
            other = SignedTermSum.build({(): other}) if other else SignedTermSum((), self.pow2)
        if not self.terms:
            return other
        if not other.terms:
            return self
        a, b, p = self._aligned(other)
        for mono, c in b.items():
            a[mono] = a.get(mono, 0) + c
        return SignedTermSum.build(a, p)

    __radd__ = __add__

    def __neg__(self):
        return SignedTermSum(tuple((-c, mono) for c, mono in self.terms), self.pow2)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SignedTermSum.build({mono: c * other for c, mono in self.terms}, self.pow2)
        out: dict[Monomial, int] = {}
        for c, x in self.terms:
            for d, y in other.terms:
                mono = tuple(sorted(x + y))
                out[mono] = out.get(mono, 0) + c * d
        return SignedTermSum.build(out, self.pow2 + other.pow2)

    __rmul__ = __mul__

    def times_pow2(self, k: int) -> "SignedTermSum":
        return SignedTermSum(self.terms, self.pow2 + k)

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, m: int, d: int | None = None) -> TruncatedSymPoly:
        d = max(m, self.degree()) if d is None else d
        out = TruncatedSymPoly(m, d, {})
        for c, mono in self.terms:
            out = out + eval_monomial(mono, m, d).scale(c)
        return out.scale(Fraction(2) ** self.pow2)

    def degree(self) -> int:
        return max((sum(_degree(f) for f in mono) for _, mono in self.terms), default=0)

    def to_json(self) -> dict:
        return {"pow2": self.pow2,
                "terms": [{"sign": c, "factors": [{"basis": b, "outer": list(o), "inner": list(i)}
                                                  for b, o, i in mono]}
                          for c, mono in self.terms]}

    def __str__(self):
        body = " + ".join(f"{c}*" + "*".join(fmt_factor(f) for f in mono) if mono else str(c)
                          for c, mono in self.terms) or "0"
        return f"2^{self.pow2}*({body})" if self.pow2 else body


def _degree(f: Factor) -> int:
    return sum(f[1]) - sum(f[2])


def fmt_factor(f: Factor) -> str:
    b, outer, inner = f
    if b == "q":
        return f"q{outer[0]}"
    idx = ",".join(map(str, outer))
    if inner:
        idx += "/" + ",".join(map(str, inner))
    return f"{b}[{idx}]"


@lru_cache(maxsize=None)
def _eval_factor(f: Factor, m: int, d: int) -> TruncatedSymPoly:
    b, outer, inner = f
    if b == "q":
        return basis("q", outer[0], m, d)
    return basis(b, (outer, inner) if inner else outer, m, d)


@lru_cache(maxsize=None)
def eval_monomial(mono: Monomial, m: int, d: int) -> TruncatedSymPoly:
    if not mono:
        return constant(1, m, d)
    if len(mono) == 1:
        return _eval_factor(mono[0], m, d)
    return multiply(eval_monomial(mono[:-1], m, d), _eval_factor(mono[-1], m, d))


ZERO = SignedTermSum()
ONE = SignedTermSum(((1, ()),))


def factor(b: str, outer: Sequence[int], inner: Sequence[int] = ()) -> SignedTermSum:
    """A single basis element, with the empty index read as 1 and an
    impossible skew shape read as 0.  Zero parts are dropped."""
    outer = tuple(x for x in outer if x)
    inner = tuple(x for x in inner if x)
    if not contains(outer, inner):
        return ZERO
    if outer == inner:
        return ONE
    return SignedTermSum(((1, ((b, outer, inner),)),))


def one_row(b: str, r: int) -> SignedTermSum:
    """b[(r)] with b[(0)] = 1 and b[(r)] = 0 for r < 0."""
    if r < 0:
        return ZERO
    return factor(b, (r,)) if b != "q" else q_factor(r)


def two_row(b: str, x: int, y: int) -> SignedTermSum:
    """b[x, y] read symmetrically: b[n, n] = 0 for n >= 1, b[0, 0] = 1."""
    x, y = max(x, y), min(x, y)
    if x == y:
        return ONE if x == 0 else ZERO
    return factor(b, (x, y))


def q_factor(n: int) -> SignedTermSum:
    if n < 0:
        return ZERO
    if n == 0:
        return ONE
    return SignedTermSum(((1, (("q", (n,), ()),)),))


# ----------------------------------------------- determinants and Pfaffians

def _is_zero(x) -> bool:
    return x == 0 if isinstance(x, int | Fraction) else x.is_zero()


def determinant(M: Sequence[Sequence]):
    """Laplace expansion along rows, memoised on the set of used columns.
    Entries may be ints, TruncatedSymPoly or SignedTermSum."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise FormulaError("matrix is not square")
    memo: dict[int, object] = {}

    def rec(r: int, used: int):
        if r == n:
            return 1
        if used in memo:
            return memo[used]
        total = 0
        k = 0
        for c in range(n):
            if used >> c & 1:
                continue
            x = M[r][c]
            if not _is_zero(x):
                sub = rec(r + 1, used | 1 << c)
                if not _is_zero(sub):
                    term = x * sub
                    total = total + (term if k % 2 == 0 else -term)
            k += 1
        memo[used] = total
        return total

    return rec(0, 0)


def _check_antisymmetric(M: Sequence[Sequence]) -> int:
    n = len(M)
    if n % 2:
        raise FormulaError("Pfaffian of an odd order matrix")
    for i in range(n):
        if len(M[i]) != n or not _is_zero(M[i][i]):
            raise FormulaError("matrix is not antisymmetric")
        for j in range(i + 1, n):
            if not _is_zero(M[i][j] + M[j][i]):
                raise FormulaError("matrix is not antisymmetric")
    return n


def pfaffian(M: Sequence[Sequence]):
    """First-row expansion, memoised on the remaining index set."""
    n = _check_antisymmetric(M)
    memo: dict[tuple[int, ...], object] = {}

    def rec(idx: tuple[int, ...]):
        if not idx:
            return 1
        if idx in memo:
            return memo[idx]
        i = idx[0]
        total = 0
        for k in range(1, len(idx)):
            x = M[i][idx[k]]
            if _is_zero(x):
                continue
            sub = rec(idx[1:k] + idx[k + 1:])
            if not _is_zero(sub):
                term = x * sub
                total = total + (term if k % 2 == 1 else -term)
        memo[idx] = total
        return total

    return rec(tuple(range(n)))


def _perm_sign(p: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def _pairings(idx: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not idx:
        yield ()
        return
    for k in range(1, len(idx)):
        for rest in _pairings(idx[1:k] + idx[k + 1:]):
            yield ((idx[0], idx[k]),) + rest


def pfaffian_by_matchings(M: Sequence[Sequence]):
    """The defining sum over rho with rho(1) < rho(3) < ... and
    rho(2i-1) < rho(2i); kept as a cross-check for pfaffian()."""
    n = _check_antisymmetric(M)
    total = 0
    for pairs in _pairings(tuple(range(n))):
        rho = [x for pair in pairs for x in pair]
        term = 1
        for i, j in pairs:
            term = term * M[i][j]
        total = total + (term if _perm_sign(rho) > 0 else -term)
    return total


def evaluate_matrix(M: Sequence[Sequence[SignedTermSum]], m: int, d: int) -> list[list]:
    return [[x.evaluate(m, d) if isinstance(x, SignedTermSum) else x for x in row] for row in M]


def _scaled(f, pow2: int, sign: int, m: int, d: int) -> TruncatedSymPoly:
    if isinstance(f, int):
        f = constant(f, m, d)
    return f.scale(sign * Fraction(2) ** pow2)


# ------------------------------------------------------------ helpers

def _strict(p: Sequence[int]) -> Partition:
    p = tuple(p)
    if any(x <= 0 for x in p) or any(p[i] <= p[i + 1] for i in range(len(p) - 1)):
        raise ShapeError(f"{p} is not a strict partition")
    return p


def _desc(xs) -> Partition:
    return tuple(sorted(xs, reverse=True))


def _split_pair(alpha, beta) -> tuple[Partition, Partition, Partition, Partition]:
    alpha, beta = tuple(alpha), tuple(beta)
    if not contains(alpha, beta):
        raise ShapeError(f"{beta} is not contained in {alpha}")
    lam, mu = split_tensor(alpha)
    nu, xi = split_tensor(beta)
    return lam, mu, nu, xi


def _size(alpha: Sequence[int]) -> int:
    return max(1, sum(alpha))


# ---------------------------------------------------------- Sdet and skew P

def s_hat_det_matrix(alpha, beta=()) -> list[list[SignedTermSum]]:
    alpha, beta = tuple(alpha), tuple(beta)
    if not contains(alpha, beta):
        raise ShapeError(f"{beta} is not contained in {alpha}")
    l = len(alpha)
    b = beta + (0,) * (l - len(beta))
    return [[q_factor(alpha[i] - b[j] - i + j) for j in range(l)] for i in range(l)]


def s_hat_det(alpha, beta=(), m: int | None = None) -> TruncatedSymPoly:
    """det[q_{alpha_i - beta_j - i + j}]."""
    m = m or _size(alpha)
    M = s_hat_det_matrix(alpha, beta)
    d = max(m, sum(alpha))
    return _scaled(determinant(evaluate_matrix(M, m, d)), 0, 1, m, d)


def _even_pad(p: Partition) -> Partition:
    return p + (0,) if len(p) % 2 else p


def skew_pfaffian_matrix(lam, mu=(), kind: str = "P") -> list[list[SignedTermSum]]:
    """The block matrix for a skew P (or Q) function; both lam and mu are
    padded with a zero to even length."""
    lam, mu = _strict(lam), _strict(mu)
    if not contains(lam, mu):
        raise ShapeError(f"{mu} is not contained in {lam}")
    L, U = _even_pad(lam), _even_pad(mu)
    a, b = len(L), len(U)
    M = [[ZERO] * (a + b) for _ in range(a + b)]
    for i in range(a):
        for j in range(i + 1, a):
            M[i][j] = two_row(kind, L[i], L[j])
        for j in range(a, a + b):
            M[i][j] = one_row(kind, L[i] - U[b + a - j - 1])
    for i in range(a + b):
        for j in range(i + 1, a + b):
            M[j][i] = -M[i][j]
    return M


def skew_p_pfaffian(lam, mu=(), m: int | None = None, entries: str = "Q") -> TruncatedSymPoly:
    """P_{lam/mu} from the block Pfaffian.  With Q entries the Pfaffian is
    Q_{lam/mu}, rescaled by 2^{l(mu) - l(lam)}; entries="P" evaluates the
    same matrix with P entries as is, which is only right for some shapes."""
    m = m or _size(lam)
    M = skew_pfaffian_matrix(lam, mu, entries)
    pow2 = len(mu) - len(lam) if entries == "Q" else 0
    d = max(m, sum(lam))
    return _scaled(pfaffian(evaluate_matrix(M, m, d)), pow2, 1, m, d)


# ------------------------------------------------------- S_hat via P * P

def _signs_of(lam: Partition, mu: Partition) -> dict[int, int]:
    A = _desc(set(lam) ^ set(mu))
    return {a: (-1) ** i for i, a in enumerate(A)}


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def s1_pairs(lam, mu) -> Iterator[tuple[Partition, Partition, int]]:
    """(lam', mu', sign1): lam' inside lam, mu' containing mu, same union
    and intersection."""
    sg = _signs_of(lam, mu)
    free = _desc(set(lam) - set(mu))
    for k in range(len(free) + 1):
        for X in combinations(free, k):
            yield (_desc(set(lam) - set(X)), _desc(set(mu) | set(X)),
                   _prod(sg[a] for a in X))


def s2_pairs(lam, mu) -> Iterator[tuple[Partition, Partition, int]]:
    """(lam'', mu'', sign2): lam'' containing lam, mu'' inside mu."""
    sg = _signs_of(lam, mu)
    free = _desc(set(mu) - set(lam))
    for k in range(len(free) + 1):
        for X in combinations(free, k):
            yield (_desc(set(lam) | set(X)), _desc(set(mu) - set(X)),
                   (-1) ** k * _prod(sg[a] for a in X))


VARIANTS = ("S1", "S1plus", "S1minus", "S2")


def s_hat_as_PP(lam, mu, variant: str = "S1") -> SignedTermSum:
    lam, mu = _strict(lam), _strict(mu)
    if len(lam) - len(mu) not in (0, 1):
        raise FormulaError("need l(lam) - l(mu) in {0, 1}")
    if variant in ("S1plus", "S1minus") and len(lam) != len(mu) + 1:
        raise FormulaError(f"{variant} needs l(lam) = l(mu) + 1")
    out: dict[Monomial, int] = {}
    if variant == "S2":
        pairs, pow2 = s2_pairs(lam, mu), len(lam)
    else:
        pairs, pow2 = s1_pairs(lam, mu), len(mu) if variant == "S1" else len(lam)
    for a, b, sign in pairs:
        moved = len(b) - len(mu)
        if variant == "S1plus" and moved % 2 or variant == "S1minus" and not moved % 2:
            continue
        for c, mono in (factor("P", a) * factor("P", b)).terms:
            out[mono] = out.get(mono, 0) + sign * c
    return SignedTermSum.build(out, pow2)


# ----------------------------------------------------- perfect matchings

@dataclass(frozen=True)
class PerfectMatching:
    """s lists (value, origin) pairs; arcs and dashed arcs are 0-based
    position pairs (i, j) with i < j."""
    s: tuple[tuple[int, str], ...]
    arcs: tuple[tuple[int, int], ...]
    dashed: tuple[tuple[int, int], ...] = ()

    def crossings(self) -> int:
        edges = self.arcs + self.dashed
        return sum(1 for (a, b) in edges for (c, d) in edges if a < c < b < d)

    def sign(self) -> int:
        """(-1)^cr times the position signs of the lam and nu entries."""
        e = self.crossings()
        for i, (_, origin) in enumerate(self.s):
            if origin == "lam":
                e += i
            elif origin == "nu":
                e += i + 1
        return -1 if e % 2 else 1


def _sequence(lam: Sequence[int], mu: Sequence[int], o1: str, o2: str) -> list[tuple[int, str]]:
    s = [(x, o1) for x in lam] + [(x, o2) for x in mu]
    return sorted(s, key=lambda t: (-t[0], t[1] != o1))


def pad_pair(lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    """mu gets a zero when l(lam) = l(mu) + 1, both get one when equal."""
    if len(lam) == len(mu) + 1:
        return lam, mu + (0,)
    if len(lam) == len(mu):
        return lam + (0,), mu + (0,)
    raise FormulaError("need l(lam) - l(mu) in {0, 1}")


def matchings(lam, mu) -> Iterator[tuple[PerfectMatching, tuple[tuple[int, int], ...]]]:
    """Matchings of the padded lam entries to the padded mu entries that
    never join n_lam to n_mu for n >= 1; also yields the value pairs."""
    lam, mu = pad_pair(_strict(lam), _strict(mu))
    s = _sequence(lam, mu, "lam", "mu")
    pos = {t: i for i, t in enumerate(s)}
    for p in permutations(range(len(mu))):
        if any(lam[i] == mu[p[i]] != 0 for i in range(len(lam))):
            continue
        arcs = tuple(sorted(tuple(sorted((pos[lam[i], "lam"], pos[mu[p[i]], "mu"])))
                            for i in range(len(lam))))
        yield PerfectMatching(tuple(s), arcs), tuple((lam[i], mu[p[i]]) for i in range(len(lam)))


def s_hat_perfect_matchings(lam, mu) -> SignedTermSum:
    total = SignedTermSum()
    for pm, pairs in matchings(lam, mu):
        term = ONE
        for x, y in pairs:
            term = term * two_row("P", x, y)
        total = total + term * pm.sign()
    return total.times_pow2(len(_strict(lam)))


def pp_as_s_hat(lam, mu) -> SignedTermSum:
    """P_lam P_mu as a signed sum of S_hat functions."""
    lam, mu = _strict(lam), _strict(mu)
    l0, m0 = set(lam) | set(mu), set(lam) & set(mu)
    D = _desc(l0 - m0)
    chi = set(mu) - set(lam)

    def sign4(nu) -> int:
        return _prod((-1) ** sum(1 for x in D if x >= y) for y in nu)

    out: dict[Monomial, int] = {}
    for nu in combinations(D, len(D) // 2):
        alpha = tensor_shape(_desc(l0 - set(nu)), _desc(m0 | set(nu)))
        sign = (-1) ** (len(chi) + len(chi & set(nu))) * sign4(nu) * sign4(chi)
        mono = (("S_hat", alpha, ()),) if alpha else ()
        out[mono] = out.get(mono, 0) + sign
    return SignedTermSum.build(out, -len(l0))


# ------------------------------------------------------------- Giambelli

def giambelli_matrix(lam, mu, kind: str = "P") -> list[list[SignedTermSum]]:
    lam, mu = pad_pair(_strict(lam), _strict(mu))
    M = []
    for x in lam:
        row = []
        for y in mu:
            if x == y:
                row.append(ONE if x == 0 else ZERO)
            elif x > y:
                row.append(two_row(kind, x, y))
            else:
                row.append(-two_row(kind, y, x))
        M.append(row)
    return M


def giambelli_det(lam, mu, m: int | None = None) -> TruncatedSymPoly:
    """2^{l(lam)} det of the padded P-matrix."""
    m = m or _size(tensor_shape(lam, mu))
    M = giambelli_matrix(lam, mu)
    d = max(m, sum(lam) + sum(mu))
    return _scaled(determinant(evaluate_matrix(M, m, d)), len(lam), 1, m, d)


def signed_sequence(lam, mu) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A = lam u mu with repeats (padded), and its sign pattern: +1 for lam
    entries, -1 for mu entries, lam first on ties."""
    lam, mu = pad_pair(_strict(lam), _strict(mu))
    s = _sequence(lam, mu, "lam", "mu")
    return tuple(x for x, _ in s), tuple(1 if o == "lam" else -1 for _, o in s)


def transposition_parity(signs: Sequence[int]) -> int:
    """Parity of the number of adjacent swaps taking +,-,+,-,... to signs."""
    plus = [i for i, x in enumerate(signs) if x > 0]
    return sum(p - 2 * k for k, p in enumerate(plus)) % 2


def _pf_entry(kind: str, a: int, sa: int, b: int, sb: int) -> SignedTermSum:
    if sa == sb or a == b != 0:
        return ZERO
    return two_row(kind, a, b)


def giambelli_pf_matrix(lam, mu, kind: str = "P") -> list[list[SignedTermSum]]:
    A, sg = signed_sequence(lam, mu)
    n = len(A)
    M = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            M[i][j] = _pf_entry(kind, A[i], sg[i], A[j], sg[j])
            M[j][i] = -M[i][j]
    return M


def giambelli_pf(lam, mu, m: int | None = None) -> TruncatedSymPoly:
    m = m or _size(tensor_shape(lam, mu))
    _, sg = signed_sequence(lam, mu)
    M = giambelli_pf_matrix(lam, mu)
    sign = -1 if transposition_parity(sg) else 1
    d = max(m, sum(lam) + sum(mu))
    return _scaled(pfaffian(evaluate_matrix(M, m, d)), len(lam), sign, m, d)


# ------------------------------------------------------------ skew S_hat

def skew_s_hat_as_QQ(alpha, beta, variant: str = "eq1") -> SignedTermSum:
    lam, mu, nu, xi = _split_pair(alpha, beta)
    if variant == "eq1":
        outer, inner = s1_pairs(lam, mu), list(s2_pairs(nu, xi))
        pow2 = len(nu) - len(lam)
    elif variant == "eq2":
        outer, inner = s2_pairs(lam, mu), list(s1_pairs(nu, xi))
        m = len(nu) + (len(nu) == len(xi))
        n = len(lam) + (len(lam) == len(mu))
        pow2 = m - n
    else:
        raise FormulaError(f"unknown variant {variant!r}")
    total = SignedTermSum()
    for l1, m1, s_out in outer:
        for n1, x1, s_in in inner:
            term = factor("Q", l1, n1) * factor("Q", m1, x1)
            if term.terms:
                total = total + term * (s_out * s_in)
    return total.times_pow2(pow2)


def skew_pad(lam, mu, nu, xi) -> tuple[Partition, Partition, Partition, Partition]:
    """Padding used by the skew matching and skew determinant formulas."""
    if len(lam) == len(mu) + 1:
        lam, mu = lam, mu + (0,)
    elif len(nu) == len(xi):
        lam, mu = lam + (0,), mu + (0,)
    if len(xi) == len(nu) - 1:
        xi = xi + (0,)
    return lam, mu, nu, xi


_ALLOWED = {frozenset(("lam", "mu")): False, frozenset(("lam", "nu")): True,
            frozenset(("mu", "xi")): True}


def skew_matchings(alpha, beta) -> Iterator[PerfectMatching]:
    lam, mu, nu, xi = skew_pad(*_split_pair(alpha, beta))
    s = tuple(_sequence(lam, mu, "lam", "mu") + _sequence(nu, xi, "nu", "xi"))

    def rec(free: tuple[int, ...], arcs, dashed):
        if not free:
            yield PerfectMatching(s, tuple(arcs), tuple(dashed))
            return
        i = free[0]
        for k in range(1, len(free)):
            j = free[k]
            (a, oa), (b, ob) = s[i], s[j]
            key = frozenset((oa, ob))
            if len(key) < 2 or key not in _ALLOWED:
                continue
            if not _ALLOWED[key] and a == b != 0:
                continue
            rest = free[1:k] + free[k + 1:]
            if _ALLOWED[key]:
                yield from rec(rest, arcs, dashed + [(i, j)])
            else:
                yield from rec(rest, arcs + [(i, j)], dashed)

    yield from rec(tuple(range(len(s))), [], [])


def skew_s_hat_matchings(alpha, beta) -> SignedTermSum:
    lam, mu, nu, xi = _split_pair(alpha, beta)
    deg = len(nu) - len(mu) if len(lam) == len(mu) else len(xi) - len(mu)
    total = SignedTermSum()
    for pm in skew_matchings(alpha, beta):
        term = ONE
        for i, j in pm.arcs:
            term = term * two_row("Q", pm.s[i][0], pm.s[j][0])
        for i, j in pm.dashed:
            term = term * one_row("Q", pm.s[i][0] - pm.s[j][0])
        if term.terms:
            total = total + term * pm.sign()
    return total.times_pow2(deg)


def skew_giambelli_matrix(alpha, beta) -> list[list[SignedTermSum]]:
    lam, mu, nu, xi = _split_pair(alpha, beta)
    lam, mu = pad_pair(lam, mu)
    if len(xi) == len(nu) - 1:
        xi = xi + (0,)
    top = giambelli_matrix_padded(lam, mu, "Q")
    a, b = len(lam), len(nu)
    M = [row + [ZERO] * b for row in top] + [[ZERO] * (a + b) for _ in range(b)]
    for i in range(a):
        for j in range(b):
            M[i][a + j] = one_row("Q", lam[i] - nu[j])
    for i in range(b):
        for j in range(a):
            M[a + i][j] = -one_row("Q", mu[j] - xi[i])
    return M


def giambelli_matrix_padded(lam: Partition, mu: Partition, kind: str) -> list[list[SignedTermSum]]:
    """The P-tilde case table on already padded sequences."""
    M = []
    for x in lam:
        row = []
        for y in mu:
            if x == y:
                row.append(ONE if x == 0 else ZERO)
            elif x > y:
                row.append(two_row(kind, x, y))
            else:
                row.append(-two_row(kind, y, x))
        M.append(row)
    return M


def skew_giambelli_det(alpha, beta, m: int | None = None) -> TruncatedSymPoly:
    lam, mu, nu, xi = _split_pair(alpha, beta)
    m = m or _size(alpha)
    M = skew_giambelli_matrix(alpha, beta)
    d = max(m, sum(alpha))
    return _scaled(determinant(evaluate_matrix(M, m, d)), len(xi) - len(mu), 1, m, d)


def skew_signed_sequences(alpha, beta):
    lam, mu, nu, xi = _split_pair(alpha, beta)
    A, sa = signed_sequence(lam, mu)
    B, sb = signed_sequence(nu, xi) if nu else ((), ())
    return A, sa, B, sb


def skew_giambelli_pf_matrix(alpha, beta) -> list[list[SignedTermSum]]:
    A, sa, B, sb = skew_signed_sequences(alpha, beta)
    n, k = len(A), len(B)
    M = [[ZERO] * (n + k) for _ in range(n + k)]
    for i in range(n):
        for j in range(i + 1, n):
            M[i][j] = _pf_entry("Q", A[i], sa[i], A[j], sa[j])
        for j in range(k):
            if sa[i] == sb[j]:
                M[i][n + j] = one_row("Q", A[i] - B[j])
    for i in range(n + k):
        for j in range(i + 1, n + k):
            M[j][i] = -M[i][j]
    return M


def skew_giambelli_pf(alpha, beta, m: int | None = None) -> TruncatedSymPoly:
    lam, mu, nu, xi = _split_pair(alpha, beta)
    A, sa, B, sb = skew_signed_sequences(alpha, beta)
    m = m or _size(alpha)
    e = transposition_parity(sa) + transposition_parity(sb) + len(B) // 2
    M = skew_giambelli_pf_matrix(alpha, beta)
    d = max(m, sum(alpha))
    return _scaled(pfaffian(evaluate_matrix(M, m, d)), len(xi) - len(mu), (-1) ** e, m, d)


# ------------------------------------------------------- Q expansions

def _hat(p: Partition, i: int) -> Partition:
    return p[:i] + p[i + 1:]


def qq_first_column(lam, mu) -> SignedTermSum:
    """sum_i (-1)^{i-1} Q[(lam_i - mu_1)] Q[lam^_i / mu^_1]."""
    lam, mu = _strict(lam), _strict(mu)
    total = SignedTermSum()
    for i in range(len(lam)):
        term = one_row("Q", lam[i] - mu[0]) * factor("Q", _hat(lam, i), mu[1:])
        total = total + term * (-1) ** i
    return total


def qq_vanishing_sum(lam, mu) -> SignedTermSum:
    """sum_i (-1)^{i-1} Q[(lam_i - mu_1)] Q[lam^_i / mu]."""
    lam, mu = _strict(lam), _strict(mu)
    total = SignedTermSum()
    for i in range(len(lam)):
        term = one_row("Q", lam[i] - mu[0]) * factor("Q", _hat(lam, i), mu)
        total = total + term * (-1) ** i
    return total


def qq_expansion_identities(lam, mu, m: int | None = None) -> dict[str, bool]:
    lam, mu = _strict(lam), _strict(mu)
    if not mu:
        raise FormulaError("both identities need mu nonempty")
    m = m or _size(lam)
    d = max(m, sum(lam))
    target = basis("Q", (lam, mu), m, d)
    return {"QQ1": qq_first_column(lam, mu).evaluate(m, d) == target,
            "QQ2": qq_vanishing_sum(lam, mu).evaluate(m, d).is_zero()}


# ---------------------------------------------------- the identity suite

def s_hat_enumeration(alpha, beta=(), m: int | None = None) -> TruncatedSymPoly:
    m = m or _size(alpha)
    beta = tuple(beta)
    return basis("S_hat", (tuple(alpha), beta) if beta else tuple(alpha), m, max(m, sum(alpha)))


def all_formulas(alpha, beta=(), m: int | None = None) -> dict[str, TruncatedSymPoly]:
    """Every formula that applies to alpha / beta, evaluated in m variables."""
    alpha, beta = tuple(alpha), tuple(beta)
    m = m or _size(alpha)
    out = {"enumeration": s_hat_enumeration(alpha, beta, m),
           "q-determinant": s_hat_det(alpha, beta, m)}
    if not beta:
        lam, mu = split_tensor(alpha)
        for v in VARIANTS:
            if v in ("S1plus", "S1minus") and len(lam) != len(mu) + 1:
                continue
            out[f"sinpp-{v}"] = s_hat_as_PP(lam, mu, v).evaluate(m)
        out["sinpp-matchings"] = s_hat_perfect_matchings(lam, mu).evaluate(m)
        out["giambelli-det"] = giambelli_det(lam, mu, m)
        out["giambelli-pf"] = giambelli_pf(lam, mu, m)
    out["skew-qq-eq1"] = skew_s_hat_as_QQ(alpha, beta, "eq1").evaluate(m)
    out["skew-qq-eq2"] = skew_s_hat_as_QQ(alpha, beta, "eq2").evaluate(m)
    out["skew-matchings"] = skew_s_hat_matchings(alpha, beta).evaluate(m)
    out["skew-det"] = skew_giambelli_det(alpha, beta, m)
    out["skew-pf"] = skew_giambelli_pf(alpha, beta, m)
    return out


def disagreements(alpha, beta=(), m: int | None = None) -> list[str]:
    vals = all_formulas(alpha, beta, m)
    ref = vals["enumeration"]
    return [k for k, v in vals.items() if v != ref]
