"""Reading words and word predicates."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .core import Tableau, is_primed, toggle, unprime, value_of
from .insertion import mixed_insert

Word = tuple[int, ...]


def read(T: Tableau) -> Word:
    """Rows from the bottom one up, each row left to right."""
    return tuple(x for row in reversed(T.rows) for x in row)


def wread(T: Tableau | Sequence[int]) -> Word:
    """Unprimed letters of w'w, where w = read(T) and w' is w reversed with
    every prime toggled."""
    w = read(T) if isinstance(T, Tableau) else tuple(T)
    dual = tuple(toggle(x) for x in reversed(w))
    return tuple(x for x in dual + w if not is_primed(x))


def rev(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


# ------------------------------------------------------------- Yamanouchi

def is_yamanouchi(w: Sequence[int]) -> bool:
    """Scanning right to left, every prefix has at least as many i as i+1."""
    counts: dict[int, int] = {}
    for x in reversed(w):
        v = value_of(x)
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def is_shifted_yamanouchi(w: Sequence[int]) -> tuple[bool, dict[int, tuple[int, ...]]]:
    """Returns the verdict and the seq(r) table (1-based positions)."""
    vals = [value_of(x) for x in w]
    table: dict[int, tuple[int, ...]] = {}
    if not vals:
        return True, table
    ok = is_yamanouchi(w)
    first = {}
    for pos, v in enumerate(vals):
        first.setdefault(v, pos)
    for v, pos in first.items():
        if v > 1 and not any(u == v - 1 for u in vals[:pos]):
            ok = False
    alive = [True] * len(vals)
    for r in range(max(vals), 0, -1):
        seq = []
        start = 0
        for i in range(r):
            target = r - i
            pos = next((p for p in range(start, len(vals)) if alive[p] and vals[p] == target), None)
            if pos is None:
                break
            seq.append(pos + 1)
            start = pos + 1
        for p in seq:
            alive[p - 1] = False
        table[r] = tuple(seq)
        if len(seq) < r:
            ok = False
    last = [table[r][r - 1] for r in sorted(table) if len(table[r]) == r]
    if len(last) != len(table) or any(last[i] >= last[i + 1] for i in range(len(last) - 1)):
        ok = False
    return ok, table


# -------------------------------------------------------------- LRS words

def lattice_counters(w: Sequence[int]) -> dict[int, list[int]]:
    """m_i(j) for 0 <= j <= 2n: unprimed i read from the right, then primed
    i' read from the left."""
    n = len(w)
    top = max((value_of(x) for x in w), default=0)
    m = {i: [0] * (2 * n + 1) for i in range(0, top + 2)}
    for j in range(1, n + 1):
        x = w[n - j]
        for i in m:
            m[i][j] = m[i][j - 1] + (1 if x == 2 * i else 0)
    for j in range(1, n + 1):
        x = w[j - 1]
        for i in m:
            m[i][n + j] = m[i][n + j - 1] + (1 if x == 2 * i - 1 else 0)
    return m


def _lattice(w: Sequence[int], m: dict[int, list[int]]) -> bool:
    n = len(w)
    for i in m:
        if i < 2:
            continue
        for j in range(0, 2 * n):
            if m[i][j] != m[i - 1][j]:
                continue
            if j < n:
                x = w[n - j - 1]
                if x in (2 * i, 2 * i - 1):
                    return False
            else:
                x = w[j - n]
                if x in (2 * (i - 1), 2 * i - 1):
                    return False
    return True


def _first_unprimed(w: Sequence[int]) -> bool:
    seen = set()
    for x in w:
        v = value_of(x)
        if v not in seen:
            if is_primed(x):
                return False
            seen.add(v)
    return True


def hat(x: int) -> int:
    """i -> (i+1)' and i' -> i; in letter codes both are x + 1."""
    return x + 1


def is_lrs_word(w: Sequence[int]) -> tuple[bool, dict[int, list[int]]]:
    m = lattice_counters(w)
    ok = _lattice(w, m) and _first_unprimed(w)
    return ok, m


def is_lrs_word_hat(w: Sequence[int]) -> bool:
    """The restated form: scanning hat(w) * w from the right, each letter i
    or i' (i > 1) needs strictly more unprimed i-1 than unprimed i so far,
    and only unprimed letters are counted."""
    hw = tuple(hat(x) for x in reversed(w))
    counts: dict[int, int] = {}
    for x in reversed(hw + tuple(w)):
        v = value_of(x)
        if v > 1 and counts.get(v - 1, 0) <= counts.get(v, 0):
            return False
        if not is_primed(x):
            counts[v] = counts.get(v, 0) + 1
    return _first_unprimed(w)


# -------------------------------------------------------- plactic relations

# (left pattern, right pattern, condition on a, b, c, d).  The sixth
# relation needs c < d: with c = d it would identify 2331 and 3231, whose
# mixed insertion tableaux differ.
RELATIONS = (
    ("abdc", "adbc", lambda a, b, c, d: a <= b <= c < d),
    ("acdb", "acbd", lambda a, b, c, d: a <= b < c <= d),
    ("dacb", "adcb", lambda a, b, c, d: a <= b < c < d),
    ("badc", "bdac", lambda a, b, c, d: a < b <= c < d),
    ("cbda", "cdba", lambda a, b, c, d: a < b < c <= d),
    ("dbca", "bdca", lambda a, b, c, d: a < b <= c < d),
    ("bcda", "bcad", lambda a, b, c, d: a < b <= c <= d),
    ("cadb", "cdab", lambda a, b, c, d: a <= b < c <= d),
)


def _rewrites(window: Sequence[int]) -> Iterable[tuple[int, ...]]:
    for left, right, cond in RELATIONS:
        for src, dst in ((left, right), (right, left)):
            roles = dict(zip(src, window))
            if cond(roles["a"], roles["b"], roles["c"], roles["d"]):
                yield tuple(roles[ch] for ch in dst)


def neighbours(w: Sequence[int]) -> set[Word]:
    w = tuple(w)
    out = set()
    for k in range(len(w) - 3):
        for new in _rewrites(w[k:k + 4]):
            if new != w[k:k + 4]:
                out.add(w[:k] + new + w[k + 4:])
    return out


def rewrite_closure(u: Sequence[int], maxlen: int = 10, budget: int = 10 ** 6) -> set[Word]:
    """All words reachable from u by the shifted plactic relations."""
    u = tuple(u)
    if len(u) > maxlen:
        raise ValueError(f"word longer than {maxlen}")
    seen = {u}
    todo = deque([u])
    while todo:
        w = todo.popleft()
        for v in neighbours(w):
            if v not in seen:
                seen.add(v)
                if len(seen) > budget:
                    raise ValueError("closure budget exceeded")
                todo.append(v)
    return seen


def shifted_plactic_equiv(u: Sequence[int], v: Sequence[int]) -> bool:
    return mixed_insert(u).insertion == mixed_insert(v).insertion


def content_word(w: Sequence[int]) -> tuple[int, ...]:
    vals = [value_of(x) for x in w]
    top = max(vals, default=0)
    return tuple(vals.count(i) for i in range(1, top + 1))


def unprime_word(w: Sequence[int]) -> Word:
    return tuple(unprime(x) for x in w)
