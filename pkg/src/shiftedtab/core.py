"""Partitions, shapes, marked letters and tableaux.

Letters of the marked alphabet 1' < 1 < 2' < 2 < ... are stored as plain
integers: the unprimed letter i is ``2*i`` and the primed letter i' is
``2*i - 1``.  Integer order is then exactly the marked order, so every
comparison in the insertion algorithms is an ordinary ``<``.

Coordinates are 1-based (row, column) in matrix convention.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


class ShapeError(ValueError):
    pass


class TableauError(ValueError):
    pass


# ---------------------------------------------------------------- letters

def code(value: int, primed: bool = False) -> int:
    return 2 * value - (1 if primed else 0)


def value_of(c: int) -> int:
    return (c + 1) >> 1


def is_primed(c: int) -> bool:
    return bool(c & 1)


def unprime(c: int) -> int:
    return c + (c & 1)


def prime(c: int) -> int:
    return c - 1 + (c & 1)


def toggle(c: int) -> int:
    return c + 1 if c & 1 else c - 1


class Letter(int):
    """A marked letter.  ``Letter(3)`` is 3 and ``Letter(3, True)`` is 3'."""

    def __new__(cls, value: int, primed: bool = False):
        if value < 1:
            raise ValueError(f"letters are positive, got {value}")
        return int.__new__(cls, code(value, primed))

    @classmethod
    def from_code(cls, c: int) -> "Letter":
        return cls(value_of(c), is_primed(c))

    @property
    def value(self) -> int:
        return value_of(self)

    @property
    def primed(self) -> bool:
        return is_primed(self)

    def __repr__(self) -> str:
        return fmt_letter(self)

    __str__ = __repr__


def fmt_letter(c: int) -> str:
    return f"{value_of(c)}'" if c & 1 else str(value_of(c))


def parse_letter(s: str) -> int:
    s = s.strip()
    if s.endswith("'"):
        return Letter(int(s[:-1]), True)
    return Letter(int(s))


def word(spec: str | Iterable) -> tuple[int, ...]:
    """Parse a word: a space separated string like "1 2' 3" or a sequence
    of letters, where plain integers are unprimed and strings are parsed."""
    if isinstance(spec, str):
        return tuple(parse_letter(t) for t in spec.split())
    return tuple(x if isinstance(x, Letter) else parse_letter(x) if isinstance(x, str)
                 else Letter(x) for x in spec)


def fmt_word(w: Iterable[int]) -> str:
    return " ".join(fmt_letter(c) for c in w)


def values(w: Iterable[int]) -> tuple[int, ...]:
    return tuple(value_of(c) for c in w)


# ------------------------------------------------------------- partitions

def check_partition(parts: Iterable[int]) -> Partition:
    p = tuple(parts)
    if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ShapeError(f"not a partition: {p}")
    return p


def check_strict(parts: Iterable[int]) -> Partition:
    p = check_partition(parts)
    if any(p[i] == p[i + 1] for i in range(len(p) - 1)):
        raise ShapeError(f"not a strict partition: {p}")
    return p


def parse_partition(s: str) -> Partition:
    s = s.strip()
    if s in ("", "0", "()", "-"):
        return ()
    parts = []
    for pos, t in enumerate(s.strip("()").split(","), start=1):
        try:
            parts.append(int(t))
        except ValueError:
            raise ShapeError(f"bad part {t.strip()!r} at position {pos}") from None
    return check_partition(parts)


def fmt_partition(p: Sequence[int]) -> str:
    return ",".join(map(str, p))


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def strict_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - k, k - 1):
            yield (k,) + rest


def sub_partitions(outer: Sequence[int], strict: bool = False) -> Iterator[Partition]:
    """All partitions (strict if asked) contained in ``outer``."""

    def rec(i: int, bound: int) -> Iterator[Partition]:
        yield ()
        if i == len(outer):
            return
        for k in range(min(bound, outer[i]), 0, -1):
            for rest in rec(i + 1, k - 1 if strict else k):
                yield (k,) + rest

    yield from rec(0, outer[0] if outer else 0)


def tensor_shape(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    """The ordinary partition lam (x) mu: column j holds lam_j cells from the
    diagonal downwards, row i holds mu_i cells strictly right of it."""
    lam, mu = check_strict(lam), check_strict(mu)
    if len(lam) not in (len(mu), len(mu) + 1):
        raise ShapeError(f"length mismatch in {lam} (x) {mu}")
    cells = {(j + k, j) for j in range(1, len(lam) + 1) for k in range(lam[j - 1])}
    cells |= {(i, i + k) for i in range(1, len(mu) + 1) for k in range(1, mu[i - 1] + 1)}
    nrows = max(r for r, _ in cells) if cells else 0
    rows = tuple(sum(1 for r, _ in cells if r == i) for i in range(1, nrows + 1))
    ok = all((r, c - 1) in cells for r, c in cells if c > 1) and all(
        (r - 1, c) in cells for r, c in cells if r > 1)
    if not ok:
        raise ShapeError(f"{lam} and {mu} do not glue to a partition")
    return rows


def split_tensor(alpha: Sequence[int]) -> tuple[Partition, Partition]:
    """Inverse of tensor_shape: column lengths from the diagonal down give
    lam, row lengths strictly right of the diagonal give mu."""
    alpha = tuple(alpha)
    at = conjugate(alpha)
    d = sum(1 for i, a in enumerate(alpha) if a > i)
    lam = tuple(at[i] - i for i in range(d))
    mu = tuple(alpha[i] - i - 1 for i in range(d) if alpha[i] - i - 1 > 0)
    return lam, mu


# ----------------------------------------------------------------- shapes

@dataclass(frozen=True)
class Shape:
    """A cell set.  kind is one of ordinary, shifted, eps+ or eps-.  Skew
    shapes carry an inner partition; eps shapes only use outer (= lambda)."""

    kind: str
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        if self.kind not in ("ordinary", "shifted", "eps+", "eps-"):
            raise ShapeError(f"unknown shape kind {self.kind!r}")
        check = check_partition if self.kind == "ordinary" else check_strict
        check(self.outer)
        check(self.inner)
        if self.inner and (self.kind.startswith("eps") or not contains(self.outer, self.inner)):
            raise ShapeError(f"{self.inner} is not inside {self.outer}")

    @cached_property
    def spans(self) -> tuple[tuple[int, int], ...]:
        """Per row: (first column, number of cells)."""
        lam, mu = self.outer, self.inner
        if self.kind == "ordinary":
            return tuple((1 + (mu[i] if i < len(mu) else 0),
                          lam[i] - (mu[i] if i < len(mu) else 0)) for i in range(len(lam)))
        if self.kind == "shifted":
            return tuple((i + 1 + (mu[i] if i < len(mu) else 0),
                          lam[i] - (mu[i] if i < len(mu) else 0)) for i in range(len(lam)))
        n = lam[0] if lam else 0
        rows: dict[int, list[int]] = {r: [] for r in range(1, n + 1)}
        for i, li in enumerate(lam, start=1):
            lo, hi = (n - li + 1, n) if self.kind == "eps-" else (i, i + li - 1)
            for r in range(lo, hi + 1):
                rows[r].append(n + i - r)
        return tuple((min(cs), len(cs)) if cs else (1, 0) for _, cs in sorted(rows.items()))

    @property
    def size(self) -> int:
        return sum(n for _, n in self.spans)

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, (c0, n) in enumerate(self.spans, start=1) for c in range(c0, c0 + n)]

    def is_diagonal(self, r: int, c: int) -> bool:
        return self.kind == "shifted" and r == c

    def to_json(self) -> dict:
        return {"kind": self.kind, "outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, d: dict) -> "Shape":
        return cls(d["kind"], tuple(d["outer"]), tuple(d.get("inner", ())))


def shifted(outer: Sequence[int], inner: Sequence[int] = ()) -> Shape:
    return Shape("shifted", tuple(outer), tuple(inner))


def ordinary(outer: Sequence[int], inner: Sequence[int] = ()) -> Shape:
    return Shape("ordinary", tuple(outer), tuple(inner))


def epsilon_shape(lam: Sequence[int], sign: str) -> Shape:
    return Shape("eps+" if sign in ("+", "plus") else "eps-", tuple(lam))


# ---------------------------------------------------------------- tableaux

KINDS = ("SSYT", "SSShYT", "SSShYT2", "Standard", "MarkedStandard", "SSDT", "SSIDT", "Raw")


@dataclass(frozen=True)
class Tableau:
    """A filling of a shape.  rows[i] lists the entries of row i+1 from left
    to right, as letter codes."""

    shape: Shape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        spans = self.shape.spans
        if len(rows) != len(spans) or any(len(r) != n for r, (_, n) in zip(rows, spans)):
            raise TableauError(f"entries do not fit shape {self.shape}")

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for r, (row, (c0, _)) in enumerate(zip(self.rows, self.shape.spans), start=1):
            for k, x in enumerate(row):
                yield r, c0 + k, x

    def entry_map(self) -> dict[tuple[int, int], int]:
        return {(r, c): x for r, c, x in self.cells()}

    def letters(self) -> list[int]:
        return [x for row in self.rows for x in row]

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    def __str__(self) -> str:
        lines = []
        width = max((len(fmt_letter(x)) for x in self.letters()), default=1)
        for row, (c0, _) in zip(self.rows, self.shape.spans):
            cells = [" " * width] * (c0 - 1) + [fmt_letter(x).rjust(width) for x in row]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(),
                "rows": [[fmt_letter(x) for x in row] for row in self.rows]}

    @classmethod
    def from_json(cls, d: dict | str) -> "Tableau":
        if isinstance(d, str):
            d = json.loads(d)
        return cls(Shape.from_json(d["shape"]),
                   tuple(tuple(parse_letter(x) for x in row) for row in d["rows"]))


def tableau(kind: str, rows: Sequence[Sequence], inner: Sequence[int] = ()) -> Tableau:
    """Build a tableau of an ordinary or shifted (possibly skew) shape from
    rows given as strings ("1 2' 3") or sequences of letters/ints."""
    parsed = [word(r) for r in rows]
    while parsed and not parsed[-1] and len(parsed) > len(inner):
        parsed.pop()
    inner = tuple(inner)
    outer = tuple(len(r) + (inner[i] if i < len(inner) else 0) for i, r in enumerate(parsed))
    return Tableau(Shape(kind, outer, inner), tuple(parsed))


def shifted_tableau(rows: Sequence[Sequence], inner: Sequence[int] = ()) -> Tableau:
    return tableau("shifted", rows, inner)


def ordinary_tableau(rows: Sequence[Sequence], inner: Sequence[int] = ()) -> Tableau:
    return tableau("ordinary", rows, inner)


def shape_of(rows: Sequence[Sequence]) -> Partition:
    return tuple(len(r) for r in rows if r)


# -------------------------------------------------------------- validation

def _marked_ok(T: Tableau, diagonal_primes: bool, allow_primes: bool) -> bool:
    m = T.entry_map()
    for (r, c), x in m.items():
        if x & 1:
            if not allow_primes:
                return False
            if not diagonal_primes and T.shape.is_diagonal(r, c):
                return False
        left = m.get((r, c - 1))
        if left is not None and (left > x or (x & 1 and left == x)):
            return False
        up = m.get((r - 1, c))
        if up is not None and (up > x or (not x & 1 and up == x)):
            return False
    return True


def _standard_values(T: Tableau) -> bool:
    vals = sorted(value_of(x) for x in T.letters())
    return vals == list(range(1, len(vals) + 1))


def validate(T: Tableau, kind: str) -> bool:
    """Check the invariants of a tableau kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown tableau kind {kind!r}")
    sk = T.shape.kind
    if kind == "Raw":
        return True
    if kind == "SSYT":
        return sk == "ordinary" and _marked_ok(T, False, False)
    if kind in ("SSShYT", "SSShYT2"):
        return sk in ("shifted", "ordinary") and _marked_ok(T, kind == "SSShYT2", True)
    if kind == "Standard":
        return sk in ("shifted", "ordinary") and _standard_values(T) and _marked_ok(T, False, False)
    if kind == "MarkedStandard":
        return sk in ("shifted", "ordinary") and _standard_values(T) and _marked_ok(T, True, True)
    if kind == "SSDT":
        if sk != "shifted" or T.shape.inner:
            return False
        return all(not any(x & 1 for x in row) and is_hook_word(row) for row in T.rows)
    if kind == "SSIDT":
        return sk in ("eps+", "eps-") and all(
            all(row[i] <= row[i + 1] for i in range(len(row) - 1)) for row in T.rows)
    return False


def is_hook_word(w: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(w) and w[i] > w[i + 1]:
        i += 1
    return all(w[j] <= w[j + 1] for j in range(i, len(w) - 1))


# ------------------------------------------------ content, standardization

def content_of(T: Tableau | Iterable[int]) -> Partition:
    """v_i = number of i and i' (trailing zeros trimmed); not necessarily a
    partition."""
    xs = T.letters() if isinstance(T, Tableau) else list(T)
    if not xs:
        return ()
    n = max(value_of(x) for x in xs)
    v = [0] * n
    for x in xs:
        v[value_of(x) - 1] += 1
    return tuple(v)


def standardize(T: Tableau, keep_primes: bool = False) -> Tableau:
    """Replace letters by 1..n: within each value, primed copies are numbered
    top to bottom, then unprimed copies left to right.  With keep_primes the
    primes stay on the new numbers (needed by dual_bar and destandardize)."""
    cells = list(T.cells())

    def key(item):
        r, c, x = item
        return (x, r, c) if x & 1 else (x, c, r)

    new = {}
    for k, (r, c, x) in enumerate(sorted(cells, key=key), start=1):
        new[r, c] = code(k, keep_primes and bool(x & 1))
    return _refill(T, new)


def destandardize(S: Tableau, target: Sequence[int]) -> Tableau:
    """Map 1..v1 to 1, the next v2 numbers to 2 and so on, keeping primes."""
    n = len(S)
    if sum(target) != n or any(v < 0 for v in target):
        raise TableauError(f"content {tuple(target)} does not match {n} cells")
    block = []
    for i, v in enumerate(target, start=1):
        block += [i] * v
    new = {(r, c): code(block[value_of(x) - 1], bool(x & 1)) for r, c, x in S.cells()}
    return _refill(S, new)


def dual_bar(S: Tableau) -> Tableau:
    """Toggle the prime of every off-diagonal letter."""
    new = {(r, c): (x if S.shape.is_diagonal(r, c) else toggle(x)) for r, c, x in S.cells()}
    return _refill(S, new)


def _refill(T: Tableau, new: dict[tuple[int, int], int]) -> Tableau:
    rows = []
    for r, (c0, n) in enumerate(T.shape.spans, start=1):
        rows.append(tuple(new[r, c] for c in range(c0, c0 + n)))
    return Tableau(T.shape, tuple(rows))


def transpose_eps(T: Tableau) -> Tableau:
    """Reflect an eps- tableau in the main diagonal, giving an eps+ tableau
    (and back)."""
    kind = {"eps-": "eps+", "eps+": "eps-"}[T.shape.kind]
    shape = Shape(kind, T.shape.outer)
    new = {(c, r): x for r, c, x in T.cells()}
    return _refill(_blank(shape), new)


def _blank(shape: Shape) -> Tableau:
    return Tableau(shape, tuple((0,) * n for _, n in shape.spans))


def from_cells(shape: Shape, entries: dict[tuple[int, int], int]) -> Tableau:
    return _refill(_blank(shape), entries)


# ------------------------------------------------------------ enumeration

def fillings(shape: Shape, content: Sequence[int] | None = None, *,
             primes: str = "none", max_value: int | None = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Enumerate (raw rows of) semistandard fillings of an ordinary or
    shifted skew shape.

    primes: "none" gives SSYT-type fillings, "offdiag" marked fillings with
    unprimed diagonal, "all" marked fillings with no diagonal restriction.
    Either content (exact multiplicities per value) or max_value bounds the
    alphabet.
    """
    spans = shape.spans
    cells = [(r, c) for r, (c0, n) in enumerate(spans, start=1) for c in range(c0, c0 + n)]
    index = {rc: k for k, rc in enumerate(cells)}
    left = [index.get((r, c - 1), -1) for r, c in cells]
    up = [index.get((r - 1, c), -1) for r, c in cells]
    diag = [shape.is_diagonal(r, c) for r, c in cells]
    if content is not None:
        nvals = len(content)
        remaining = list(content)
        if sum(content) != len(cells):
            return
    else:
        nvals = max_value if max_value is not None else len(cells)
        remaining = None
    top = 2 * nvals
    step = 1 if primes != "none" else 2
    start = 1 if primes != "none" else 2
    fill = [0] * len(cells)
    ncell = len(cells)
    shape_rows = [n for _, n in spans]

    def emit():
        out, k = [], 0
        for n in shape_rows:
            out.append(tuple(fill[k:k + n]))
            k += n
        return tuple(out)

    def rec(k: int):
        if k == ncell:
            yield emit()
            return
        lo = start
        li, ui = left[k], up[k]
        if li >= 0:
            lo = max(lo, fill[li])
        if ui >= 0:
            lo = max(lo, fill[ui])
        for x in range(lo, top + 1, step):
            if x & 1:
                if diag[k] and primes == "offdiag":
                    continue
                if li >= 0 and fill[li] == x:
                    continue
            elif ui >= 0 and fill[ui] == x:
                continue
            if remaining is not None:
                v = (x + 1) >> 1
                if not remaining[v - 1]:
                    continue
                remaining[v - 1] -= 1
                fill[k] = x
                yield from rec(k + 1)
                remaining[v - 1] += 1
            else:
                fill[k] = x
                yield from rec(k + 1)

    yield from rec(0)


def standard_shifted_tableaux(lam: Sequence[int], inner: Sequence[int] = ()) -> Iterator[Tableau]:
    shape = shifted(lam, inner)
    n = shape.size
    for rows in fillings(shape, (1,) * n):
        yield Tableau(shape, rows)


def standard_tableaux(alpha: Sequence[int], inner: Sequence[int] = ()) -> Iterator[Tableau]:
    shape = ordinary(alpha, inner)
    n = shape.size
    for rows in fillings(shape, (1,) * n):
        yield Tableau(shape, rows)
