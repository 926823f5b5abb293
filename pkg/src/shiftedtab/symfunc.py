"""Exact symmetric polynomials in m variables, truncated at degree d.

A polynomial is stored in the monomial basis: terms maps an exponent
partition nu (with l(nu) <= m) to the coefficient of m_nu.  Coefficients
are ints, or Fractions when a power-of-two prefactor is involved.

Basis elements s, S_hat, P and Q (and their skew versions) are counted
tableau by tableau, grouped by letter: the cells holding i and i' always
form a skew strip, so a tableau of content nu is a chain of strips of sizes
nu_1, nu_2, ...  Each strip contributes the number of ways to mark it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .core import Partition, ShapeError, partitions

Coeff = int | Fraction


class DegreeError(ValueError):
    pass


class ResidueError(ArithmeticError):
    """Peeling left a nonzero remainder (too few variables)."""


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


@dataclass(frozen=True)
class TruncatedSymPoly:
    m: int
    d: int
    terms: Mapping[Partition, Coeff] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for nu, c in self.terms.items():
            if c == 0:
                continue
            if sum(nu) > self.d:
                raise DegreeError(f"degree {sum(nu)} exceeds {self.d}")
            if len(nu) <= self.m:
                clean[tuple(nu)] = _norm(c)
        object.__setattr__(self, "terms", clean)

    def _check(self, other: "TruncatedSymPoly"):
        if self.m != other.m:
            raise ValueError(f"variable count mismatch: {self.m} vs {other.m}")

    def __add__(self, other):
        if isinstance(other, int | Fraction):
            other = constant(other, self.m, self.d)
        self._check(other)
        t = dict(self.terms)
        for nu, c in other.terms.items():
            t[nu] = t.get(nu, 0) + c
        return TruncatedSymPoly(self.m, max(self.d, other.d), t)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: Coeff) -> "TruncatedSymPoly":
        return TruncatedSymPoly(self.m, self.d, {nu: c * k for nu, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int | Fraction):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int | Fraction):
            other = constant(other, self.m, self.d)
        if not isinstance(other, TruncatedSymPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(nu) for nu in self.terms), default=0)

    def coefficient(self, exponents: Sequence[int]) -> Coeff:
        """Coefficient of the monomial with the given exponent vector."""
        nu = tuple(sorted((e for e in exponents if e), reverse=True))
        return self.terms.get(nu, 0)

    def evaluate(self, xs: Sequence[Coeff]) -> Coeff:
        if len(xs) != self.m:
            raise ValueError("wrong number of values")
        total = 0
        for nu, c in self.terms.items():
            total += c * _monomial_value(nu, xs)
        return _norm(total)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{c}*m{list(nu)}" for nu, c in sorted(self.terms.items(), reverse=True)]
        return " + ".join(parts)


def _monomial_value(nu: Partition, xs: Sequence[Coeff]) -> Coeff:
    padded = tuple(nu) + (0,) * (len(xs) - len(nu))
    total = 0
    for a in set(permutations(padded)):
        term = 1
        for x, e in zip(xs, a):
            term *= x ** e
        total += term
    return total


def constant(c: Coeff, m: int, d: int = 0) -> TruncatedSymPoly:
    return TruncatedSymPoly(m, d, {(): c})


def add(f: TruncatedSymPoly, g: TruncatedSymPoly) -> TruncatedSymPoly:
    return f + g


def scale(f: TruncatedSymPoly, k: Coeff) -> TruncatedSymPoly:
    return f.scale(k)


# ---------------------------------------------------------- multiplication

@lru_cache(maxsize=None)
def _monomial_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """m_lam * m_mu with enough variables, as (nu, coefficient) pairs.

    The coefficient of m_nu counts the ways to write the exponent vector nu
    as a + b with a a rearrangement of lam and b one of mu; both supports lie
    inside the support of nu, so only l(nu) positions matter."""
    n = sum(lam) + sum(mu)
    target = tuple(sorted(mu, reverse=True))
    out = []
    for nu in partitions(n):
        L = len(nu)
        if L < max(len(lam), len(mu)) or L > len(lam) + len(mu):
            continue
        parts = Counter(lam)
        parts[0] = L - len(lam)
        count = 0

        def place(j: int, rest: list[int]):
            nonlocal count
            if j == L:
                if tuple(sorted((x for x in rest if x), reverse=True)) == target:
                    count += 1
                return
            for v in list(parts):
                if parts[v] and v <= nu[j]:
                    parts[v] -= 1
                    rest.append(nu[j] - v)
                    place(j + 1, rest)
                    rest.pop()
                    parts[v] += 1

        place(0, [])
        if count:
            out.append((nu, count))
    return tuple(out)


def monomial_product(lam: Partition, mu: Partition, m: int) -> tuple[tuple[Partition, int], ...]:
    """m_lam * m_mu in m variables."""
    return tuple((nu, c) for nu, c in _monomial_product(tuple(lam), tuple(mu)) if len(nu) <= m)


def multiply(f: TruncatedSymPoly, g: TruncatedSymPoly) -> TruncatedSymPoly:
    f._check(g)
    d = max(f.d, g.d)
    out: dict[Partition, Coeff] = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            if sum(lam) + sum(mu) > d:
                continue
            for nu, k in monomial_product(lam, mu, f.m):
                out[nu] = out.get(nu, 0) + a * b * k
    return TruncatedSymPoly(f.m, d, out)


def product(fs: Iterable[TruncatedSymPoly], m: int, d: int) -> TruncatedSymPoly:
    out = constant(1, m, d)
    for f in fs:
        out = multiply(out, f)
    return out


# ------------------------------------------------------ strips and counting

def _cells(kind: str, lam: Partition) -> set[tuple[int, int]]:
    off = 1 if kind == "shifted" else 0
    return {(i + 1, i * off + j + 1) for i, li in enumerate(lam) for j in range(li)}


def _supersets(lower: Partition, upper: Partition, size: int, strict: bool):
    """Partitions delta with lower <= delta <= upper and |delta/lower| = size."""
    n = len(upper)
    low = tuple(lower) + (0,) * (n - len(lower))

    def rec(i: int, left: int, bound: int):
        if i == n:
            if left == 0:
                yield ()
            return
        lo = low[i]
        hi = min(upper[i], bound, lo + left)
        for k in range(hi, lo - 1, -1):
            nb = k - 1 if strict and k > 0 else k
            for rest in rec(i + 1, left - (k - lo), nb):
                yield (k,) + rest

    for delta in rec(0, size, upper[0] if upper else 0):
        yield tuple(x for x in delta if x)


def _strip_weight(basis: str, cells: set[tuple[int, int]]) -> int:
    """Number of ways to fill the cells with one letter value (marked or not)."""
    if basis == "s":
        cols = [c for _, c in cells]
        return 1 if len(cols) == len(set(cols)) else 0
    # a cell with a strip neighbour on its left must be unprimed and one
    # with a strip neighbour below must be primed
    for r, c in cells:
        if (r + 1, c) in cells and (r, c - 1) in cells:
            return 0
    seen: set = set()
    free = 0
    for cell in cells:
        if cell in seen:
            continue
        stack, comp = [cell], []
        seen.add(cell)
        while stack:
            r, c = stack.pop()
            comp.append((r, c))
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if basis == "P" and any(r == c for r, c in comp):
            continue
        free += 1
    return 2 ** free


@lru_cache(maxsize=None)
def _count_chains(basis: str, outer: Partition, current: Partition, rest: Partition) -> int:
    if not rest:
        return 1 if current == outer else 0
    kind = "ordinary" if basis in ("s", "S_hat") else "shifted"
    strict = kind == "shifted"
    base = _cells(kind, current)
    total = 0
    for delta in _supersets(current, outer, rest[0], strict):
        w = _strip_weight(basis, _cells(kind, delta) - base)
        if w:
            total += w * _count_chains(basis, outer, delta, rest[1:])
    return total


def count_tableaux(basis: str, outer: Partition, inner: Partition, content: Sequence[int]) -> int:
    """Number of tableaux of shape outer/inner and the given content.

    basis: s (SSYT), S_hat (marked, ordinary shape), P (marked shifted,
    unprimed diagonal), Q (marked shifted)."""
    return _count_chains(basis, tuple(outer), tuple(inner), tuple(content))


# ----------------------------------------------------------------- bases

def _parse_index(kind: str, index) -> tuple[Partition, Partition]:
    if kind in ("q", "p"):
        return (int(index),), ()
    if isinstance(index, tuple) and len(index) == 2 and all(isinstance(x, tuple) for x in index):
        return tuple(index[0]), tuple(index[1])
    return tuple(index), ()


@lru_cache(maxsize=None)
def basis(kind: str, index, m: int, d: int | None = None) -> TruncatedSymPoly:
    """s, S_hat, P, Q indexed by a partition or an (outer, inner) pair; q
    and p indexed by an integer.  The truncation degree defaults to
    max(m, degree), matching the convention m = degree of the query."""
    outer, inner = _parse_index(kind, index)
    n = sum(outer) - sum(inner)
    if d is None:
        d = max(m, n)
    if n > d:
        raise DegreeError(f"{kind}{index} has degree {n} > {d}")
    if m < 1:
        raise ValueError("need at least one variable")
    if kind == "p":
        return TruncatedSymPoly(m, d, {(n,): 1} if n else {(): 1})
    if kind == "q":
        return TruncatedSymPoly(m, d, {nu: 2 ** len(nu) for nu in partitions(n) if len(nu) <= m})
    if kind not in ("s", "S_hat", "P", "Q"):
        raise ValueError(f"unknown basis {kind!r}")
    if kind in ("P", "Q"):
        for p in (outer, inner):
            if any(p[i] <= p[i + 1] for i in range(len(p) - 1)):
                raise ShapeError(f"{p} is not strict")
    if any(inner[i] > (outer[i] if i < len(outer) else 0) for i in range(len(inner))):
        return TruncatedSymPoly(m, d, {})
    terms = {}
    for nu in partitions(n):
        if len(nu) <= m:
            c = count_tableaux(kind, outer, inner, nu)
            if c:
                terms[nu] = c
    return TruncatedSymPoly(m, d, terms)


def s(index, m, d=None):
    return basis("s", _tup(index), m, d)


def S_hat(index, m, d=None):
    return basis("S_hat", _tup(index), m, d)


def P(index, m, d=None):
    return basis("P", _tup(index), m, d)


def Q(index, m, d=None):
    return basis("Q", _tup(index), m, d)


def q(n, m, d=None):
    return basis("q", n, m, d)


def _tup(index):
    if isinstance(index, tuple) and len(index) == 2 and all(isinstance(x, tuple) for x in index):
        return index
    return tuple(index)


# ---------------------------------------------------------------- peeling

def expand_in_basis(f: TruncatedSymPoly, kind: str = "s") -> dict[Partition, Coeff]:
    """Coefficients of f in the s or P basis by triangular peeling: the
    lexicographically largest exponent partition is always a leading term
    with coefficient 1."""
    if kind not in ("s", "P"):
        raise ValueError("peeling supports the s and P bases")
    out: dict[Partition, Coeff] = {}
    rest = f
    while rest.terms:
        lead = max(rest.terms)
        c = rest.terms[lead]
        if kind == "P" and any(lead[i] == lead[i + 1] for i in range(len(lead) - 1)):
            raise ResidueError(f"residue {lead} is not in the span of P functions")
        out[lead] = c
        rest = rest - basis(kind, lead, f.m, max(f.d, sum(lead))).scale(c)
        if lead in rest.terms:
            raise ResidueError("peeling did not cancel the leading term")
    return out


def from_expansion(coeffs: Mapping[Partition, Coeff], kind: str, m: int, d: int) -> TruncatedSymPoly:
    out = TruncatedSymPoly(m, d, {})
    for lam, c in coeffs.items():
        out = out + basis(kind, tuple(lam), m, d).scale(c)
    return out
