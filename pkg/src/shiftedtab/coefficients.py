"""Generalized Littlewood-Richardson coefficients by tableau rules.

Products and the coefficients they define:

    s_a s_b       = sum a_{ab}^g s_g          P_l P_m = sum d_{lm}^n P_n
    s_a P_l       = sum b_{al}^b s_b          P_l P_m = sum e_{lm}^a s_a
    s_a Shat_b    = sum c_{ab}^g s_g          P_l Shat_a = sum f_{la}^m P_m
    Shat_a Shat_b = sum g_{ab}^g s_g          Shat_a Shat_b = sum h_{ab}^l P_l

Every rule counts fillings; `oracle` extracts the same numbers from exact
polynomial products.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .core import (Partition, Shape, ShapeError, Tableau, check_partition, check_strict,
                   contains, fillings, partitions, shifted, strict_partitions,
                   sub_partitions, value_of)
from .insertion import shifted_insert
from .symfunc import basis, expand_in_basis
from .words import is_lrs_word, is_shifted_yamanouchi, is_yamanouchi, wread

P_ = tuple[int, ...]


def _p(x) -> Partition:
    return check_partition(tuple(x))


def _s(x) -> Partition:
    return check_strict(tuple(x))


def _read_rows(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(x for row in reversed(rows) for x in row)


def _contents(parts: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """Compositions-like splits: vectors c with 0 <= c_i <= parts_i, sum k."""
    n = len(parts)

    def rec(i, left):
        if i == n:
            if left == 0:
                yield ()
            return
        for v in range(min(parts[i], left), -1, -1):
            for rest in rec(i + 1, left - v):
                yield (v,) + rest

    yield from rec(0, k)


@lru_cache(maxsize=None)
def _reads(kind: str, outer: Partition, inner: Partition, content: tuple[int, ...],
           primes: str) -> tuple[tuple[int, ...], ...]:
    """Reading words of all fillings, cached."""
    shape = Shape(kind, outer, inner)
    content = tuple(content)
    while content and content[-1] == 0:
        content = content[:-1]
    if sum(content) != shape.size:
        return ()
    if shape.size == 0:
        return ((),)
    return tuple(_read_rows(rows) for rows in fillings(shape, content, primes=primes))


def _valid_skew(outer, inner) -> bool:
    return contains(outer, inner)


# ------------------------------------------------------------ the rules

def lr_a(alpha, beta, gamma) -> int:
    """a_{alpha beta}^gamma: SSYT of shape gamma/alpha and content beta with
    Yamanouchi reading word."""
    alpha, beta, gamma = _p(alpha), _p(beta), _p(gamma)
    if sum(gamma) != sum(alpha) + sum(beta):
        raise ShapeError("size mismatch")
    if not _valid_skew(gamma, alpha):
        return 0
    return sum(1 for w in _reads("ordinary", gamma, alpha, beta, "none") if is_yamanouchi(w))


def lrs_d(lam, mu, nu) -> int:
    """d_{lam mu}^nu: marked shifted tableaux of shape nu/mu, content lam,
    unprimed diagonal, LRS reading word."""
    lam, mu, nu = _s(lam), _s(mu), _s(nu)
    if sum(nu) != sum(lam) + sum(mu):
        raise ShapeError("size mismatch")
    if not _valid_skew(nu, mu):
        return 0
    return sum(1 for w in _reads("shifted", nu, mu, lam, "offdiag") if is_lrs_word(w)[0])


def coeff_b(alpha, lam, beta) -> int:
    """b_{alpha lam}^beta: marked tableaux of ordinary shape beta/alpha and
    content lam with LRS reading word."""
    alpha, lam, beta = _p(alpha), _s(lam), _p(beta)
    if sum(beta) != sum(alpha) + sum(lam):
        raise ShapeError("size mismatch")
    if not _valid_skew(beta, alpha):
        return 0
    return sum(1 for w in _reads("ordinary", beta, alpha, lam, "all") if is_lrs_word(w)[0])


def coeff_c(alpha, beta, gamma) -> int:
    """c_{alpha beta}^gamma: marked tableaux of shape gamma/alpha, content
    beta, primes anywhere, Yamanouchi weak reading word."""
    alpha, beta, gamma = _p(alpha), _p(beta), _p(gamma)
    if sum(gamma) != sum(alpha) + sum(beta):
        raise ShapeError("size mismatch")
    if not _valid_skew(gamma, alpha):
        return 0
    return sum(1 for w in _reads("ordinary", gamma, alpha, beta, "all") if is_yamanouchi(wread(w)))


def coeff_e(lam, mu, alpha) -> int:
    """e_{lam mu}^alpha as a sum over the intermediate shape beta of pairs of
    LRS tableaux (T of shape beta, content lam; U of shape alpha/beta,
    content mu)."""
    lam, mu, alpha = _s(lam), _s(mu), _p(alpha)
    if sum(alpha) != sum(lam) + sum(mu):
        raise ShapeError("size mismatch")
    total = 0
    for beta in sub_partitions(alpha):
        if sum(beta) != sum(lam):
            continue
        t = sum(1 for w in _reads("ordinary", beta, (), lam, "all") if is_lrs_word(w)[0])
        if t:
            u = sum(1 for w in _reads("ordinary", alpha, beta, mu, "all") if is_lrs_word(w)[0])
            total += t * u
    return total


def _weak_words(kind: str, shape: Partition, content: tuple[int, ...], primes: str):
    return [wread(w) for w in _reads(kind, shape, (), content, primes)]


def coeff_e_yamanouchi(lam, mu, alpha) -> int:
    """e_{lam mu}^alpha from pairs of marked shifted tableaux T (shape lam)
    and U (shape mu) with wread(U) * wread(T) Yamanouchi of content alpha."""
    lam, mu, alpha = _s(lam), _s(mu), _p(alpha)
    if sum(alpha) != sum(lam) + sum(mu):
        raise ShapeError("size mismatch")
    return _pair_count("shifted", lam, mu, alpha, "offdiag")


def _pair_count(kind: str, first: Partition, second: Partition, alpha: Partition,
                primes: str) -> int:
    """Pairs (A of shape first, B of shape second) with wread(B) * wread(A)
    Yamanouchi of content alpha."""
    total = 0
    for ca in _contents(alpha, sum(first)):
        cb = tuple(a - b for a, b in zip(alpha, ca))
        wa = _weak_words(kind, first, ca, primes)
        if not wa:
            continue
        wb = _weak_words(kind, second, cb, primes)
        # the right factor must be Yamanouchi on its own
        wa = [w for w in wa if is_yamanouchi(w)]
        for a in wa:
            for b in wb:
                if is_yamanouchi(b + a):
                    total += 1
    return total


def coeff_f(lam, alpha, mu) -> int:
    """f_{lam alpha}^mu: marked shifted tableaux of shape mu/lam, content
    alpha, primes anywhere (diagonal included), Yamanouchi weak reading."""
    lam, alpha, mu = _s(lam), _p(alpha), _s(mu)
    if sum(mu) != sum(lam) + sum(alpha):
        raise ShapeError("size mismatch")
    if not _valid_skew(mu, lam):
        return 0
    return sum(1 for w in _reads("shifted", mu, lam, alpha, "all") if is_yamanouchi(wread(w)))


def coeff_g(alpha, beta, gamma) -> int:
    """g_{alpha beta}^gamma: pairs (A, B) of marked tableaux of ordinary
    shapes alpha and beta with wread(B) * wread(A) Yamanouchi of content
    gamma."""
    alpha, beta, gamma = _p(alpha), _p(beta), _p(gamma)
    if sum(gamma) != sum(alpha) + sum(beta):
        raise ShapeError("size mismatch")
    return _pair_count("ordinary", alpha, beta, gamma, "all")


def coeff_h(alpha, beta, lam, pairs: bool = False) -> int:
    """h_{alpha beta}^lam = 2^l(lam) times the number of pairs (A, B) of
    marked tableaux of shapes alpha, beta with read(A) * read(B) an LRS word
    of content lam.  With pairs=True the bare pair count is returned."""
    alpha, beta, lam = _p(alpha), _p(beta), _s(lam)
    if sum(lam) != sum(alpha) + sum(beta):
        raise ShapeError("size mismatch")
    count = 0
    for ca in _contents(lam, sum(alpha)):
        cb = tuple(a - b for a, b in zip(lam, ca))
        ra = _reads("ordinary", alpha, (), ca, "all")
        if not ra:
            continue
        rb = _reads("ordinary", beta, (), cb, "all")
        rb = [v for v in rb if _suffix_ok(v)]
        for u in ra:
            for v in rb:
                if is_lrs_word(u + v)[0]:
                    count += 1
    return count if pairs else count << len(lam)


def _suffix_ok(v: Sequence[int]) -> bool:
    """A suffix of an LRS word passes the right-to-left half of the lattice
    test on its own."""
    counts: dict[int, int] = {}
    for x in reversed(v):
        i = value_of(x)
        if i > 1 and counts.get(i - 1, 0) <= counts.get(i, 0):
            return False
        if not x & 1:
            counts[i] = counts.get(i, 0) + 1
    return True


# ---------------------------------------------------- alternative d-rules

def b_single(lam, alpha) -> int:
    """b_lam^alpha = b_{0 lam}^alpha."""
    return coeff_b((), lam, alpha)


def lrs_d_alt_yamanouchi(lam, mu, nu) -> int:
    """d as sum over alpha of b_lam^alpha times the number of unprimed
    tableaux of shifted shape nu/mu and content alpha with Yamanouchi
    reading word."""
    lam, mu, nu = _s(lam), _s(mu), _s(nu)
    if sum(nu) != sum(lam) + sum(mu):
        raise ShapeError("size mismatch")
    if not _valid_skew(nu, mu):
        return 0
    total = 0
    for alpha in partitions(sum(lam)):
        yam = sum(1 for w in _reads("shifted", nu, mu, alpha, "none") if is_yamanouchi(w))
        if yam:
            total += b_single(lam, alpha) * yam
    return total


@lru_cache(maxsize=None)
def _eps_plus_words(lam: Partition, content: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    from .ssidt import shifted_to_epsilon_plus
    from .words import read
    shape = shifted(lam)
    out = []
    for rows in fillings(shape, content, primes="offdiag"):
        out.append(read(shifted_to_epsilon_plus(Tableau(shape, rows))))
    return tuple(out)


def lrs_d_alt_ssidt(lam, mu, nu) -> int:
    """d as the number of pairs of eps+ tableaux (shapes lam and mu) whose
    reading words w_mu * w_lam form a shifted Yamanouchi word of content
    nu."""
    lam, mu, nu = _s(lam), _s(mu), _s(nu)
    if sum(nu) != sum(lam) + sum(mu):
        raise ShapeError("size mismatch")
    total = 0
    for cl in _contents(nu, sum(lam)):
        cm = tuple(a - b for a, b in zip(nu, cl))
        wl = _eps_plus_words(lam, _trim(cl)) if lam else ((),)
        if not wl:
            continue
        wm = _eps_plus_words(mu, _trim(cm)) if mu else ((),)
        wl = [w for w in wl if is_yamanouchi(w)]
        for a in wm:
            for b in wl:
                if is_shifted_yamanouchi(a + b)[0]:
                    total += 1
    return total


def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _unimodal_heights(hs: Sequence[int]) -> bool:
    """Strictly increasing up to a peak, weakly decreasing after it."""
    k = 0
    while k + 1 < len(hs) and hs[k] < hs[k + 1]:
        k += 1
    return all(hs[j] >= hs[j + 1] for j in range(k, len(hs) - 1))


def lrs_d_remmel_whitney(lam, mu, nu) -> int:
    """Standard shifted tableaux S of shape nu/mu such that within each
    block of labels belonging to one part of lam the row heights rise
    strictly and then fall weakly, and P_shift(read(S)) has shape lam."""
    lam, mu, nu = _s(lam), _s(mu), _s(nu)
    if sum(nu) != sum(lam) + sum(mu):
        raise ShapeError("size mismatch")
    if not _valid_skew(nu, mu):
        return 0
    n = sum(lam)
    shape = shifted(nu, mu)
    blocks, start = [], 1
    for part in lam:
        blocks.append(range(start, start + part))
        start += part
    count = 0
    for rows in fillings(shape, (1,) * n):
        height = {}
        for r, row in enumerate(rows, start=1):
            for x in row:
                height[value_of(x)] = r
        if not all(_unimodal_heights([height[v] for v in b]) for b in blocks):
            continue
        if shifted_insert(_read_rows(rows)).insertion.shape.outer == lam:
            count += 1
    return count


D_RULES: dict[str, Callable[..., int]] = {
    "stembridge": lrs_d,
    "ppp1": lrs_d_alt_yamanouchi,
    "pppword": lrs_d_alt_ssidt,
    "remmel-whitney": lrs_d_remmel_whitney,
}

RULES: dict[str, dict[str, Callable[..., int]]] = {
    "a": {"yamanouchi": lr_a},
    "b": {"lrs": coeff_b},
    "c": {"weak-yamanouchi": coeff_c},
    "d": D_RULES,
    "e": {"lrs-pairs": coeff_e, "weak-yamanouchi": coeff_e_yamanouchi},
    "f": {"weak-yamanouchi": coeff_f},
    "g": {"weak-yamanouchi": coeff_g},
    "h": {"lrs-pairs": coeff_h},
}


# ---------------------------------------------------------------- oracle

# family -> (left basis, right basis, output basis, strictness of the three indices)
FAMILIES = {
    "a": ("s", "s", "s", (False, False, False)),
    "b": ("s", "P", "s", (False, True, False)),
    "c": ("s", "S_hat", "s", (False, False, False)),
    "d": ("P", "P", "P", (True, True, True)),
    "e": ("P", "P", "s", (True, True, False)),
    "f": ("P", "S_hat", "P", (True, False, True)),
    "g": ("S_hat", "S_hat", "s", (False, False, False)),
    "h": ("S_hat", "S_hat", "P", (False, False, True)),
}


def oracle_expansion(family: str, left, right, m: int | None = None) -> dict[Partition, int]:
    """Expand the defining product through exact polynomials."""
    lb, rb, ob, _ = FAMILIES[family]
    left, right = tuple(left), tuple(right)
    n = sum(left) + sum(right)
    m = m or max(n, 1)
    f = basis(lb, left, m, n) * basis(rb, right, m, n)
    return expand_in_basis(f, ob)


def oracle(family: str, left, right, out) -> int:
    return oracle_expansion(family, left, right).get(tuple(out), 0)


def coefficient(family: str, left, right, out, rule: str | None = None) -> int:
    rules = RULES[family]
    fn = rules[rule] if rule else next(iter(rules.values()))
    return fn(left, right, out)


def all_rules(family: str, left, right, out, with_oracle: bool = True) -> dict[str, int]:
    res = {name: fn(left, right, out) for name, fn in RULES[family].items()}
    if with_oracle:
        res["oracle"] = oracle(family, left, right, out)
    return res


def instances(family: str, size: int) -> Iterator[tuple[Partition, Partition, Partition]]:
    """All admissible (left, right, out) with |out| = size."""
    _, _, _, strict = FAMILIES[family]

    def parts(n, s):
        return strict_partitions(n) if s else partitions(n)

    for k in range(size + 1):
        for left in parts(k, strict[0]):
            for right in parts(size - k, strict[1]):
                for out in parts(size, strict[2]):
                    yield left, right, out


# ------------------------------------------------------------ skew forms

def skew_expand(kind: str, outer, inner) -> dict[Partition, int]:
    """s_{a/b} = sum a_{b g}^a s_g,  Q_{l/m} = sum d_{m n}^l Q_n,
    Shat_{a/b} = sum a_{b g}^a Shat_g."""
    outer, inner = tuple(outer), tuple(inner)
    if not contains(outer, inner):
        raise ShapeError(f"{inner} is not inside {outer}")
    n = sum(outer) - sum(inner)
    out = {}
    if kind in ("s", "S_hat"):
        for g in partitions(n):
            c = lr_a(inner, g, outer)
            if c:
                out[g] = c
    elif kind == "Q":
        for nu in strict_partitions(n):
            c = lrs_d(nu, inner, outer)
            if c:
                out[nu] = c
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return out


# ------------------------------------------------------------ checking

def check_instance(family: str, left, right, outs: Iterable[Partition]) -> list[tuple]:
    """(left, right, out, {rule: value}, oracle) for every out where some
    rule disagrees with the oracle."""
    exp = oracle_expansion(family, left, right)
    bad = []
    for out in outs:
        want = exp.get(tuple(out), 0)
        got = {name: fn(left, right, out) for name, fn in RULES[family].items()}
        if any(v != want for v in got.values()):
            bad.append((tuple(left), tuple(right), tuple(out), got, want))
    return bad


def check_family(family: str, size: int) -> tuple[int, list[tuple]]:
    """Every admissible instance with output size `size`; returns the
    number checked and the mismatches in enumeration order."""
    groups: dict[tuple[Partition, Partition], list[Partition]] = {}
    for left, right, out in instances(family, size):
        groups.setdefault((left, right), []).append(out)
    bad = []
    for (left, right), outs in groups.items():
        bad += check_instance(family, left, right, outs)
    return sum(len(v) for v in groups.values()), bad


def check_d_rules(size: int) -> tuple[int, list[tuple]]:
    """All strict triples with |nu| = size: values of the four d rules
    where they do not all agree."""
    count, bad = 0, []
    for lam, mu, nu in instances("d", size):
        count += 1
        vals = {name: fn(lam, mu, nu) for name, fn in D_RULES.items()}
        if len(set(vals.values())) > 1:
            bad.append((lam, mu, nu, vals))
    return count, bad
