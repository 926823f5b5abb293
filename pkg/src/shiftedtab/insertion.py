"""RSK, mixed, shifted and semistandard Kraskiewicz (SK) insertion.

Every algorithm is a step function (rows, letter) -> (rows, new cell) folded
over the word.  Shifted rows are stored as lists starting on the diagonal,
so entry k of row p (both 0-based) sits in column p + k + 1.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .core import (Tableau, code, is_hook_word, is_primed, ordinary,
                   prime, shifted, unprime, value_of)

Rows = list[list[int]]


class InsertionError(ValueError):
    pass


class UnreachablePair(InsertionError):
    """The pair is not the image of any word."""


class InsertionPair(NamedTuple):
    insertion: Tableau
    recording: Tableau


class HookSplit(NamedTuple):
    decreasing: tuple[int, ...]
    increasing: tuple[int, ...]
    strict_decreasing: tuple[int, ...]
    weak_increasing: tuple[int, ...]


def _unprimed(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    if any(is_primed(x) for x in w):
        raise InsertionError("input word must be unprimed")
    return w


def _copy(rows: Rows) -> Rows:
    return [list(r) for r in rows]


def _tableau(kind: str, rows: Rows) -> Tableau:
    shape = (shifted if kind == "shifted" else ordinary)(tuple(len(r) for r in rows))
    return Tableau(shape, tuple(tuple(r) for r in rows))


def _add_record(rec: Rows, r: int, value: int) -> None:
    if r == len(rec):
        rec.append([])
    rec[r].append(value)


def _rows_of(T: Tableau) -> Rows:
    if T.shape.inner:
        raise InsertionError("skew tableaux are not insertion tableaux")
    return [list(r) for r in T.rows]


def _position_of(rec: Rows, value: int) -> int:
    """Row (0-based) holding recording value (primes ignored); must be a
    row end."""
    for r, row in enumerate(rec):
        if row and value_of(row[-1]) == value:
            return r
    raise InsertionError(f"recording value {value} is not at a corner")


def _check_recording(P: Tableau, Q: Tableau) -> int:
    if P.shape.outer != Q.shape.outer or P.shape.kind != Q.shape.kind:
        raise InsertionError("insertion and recording shapes differ")
    vals = sorted(value_of(x) for x in Q.letters())
    if vals != list(range(1, len(vals) + 1)):
        raise InsertionError("recording tableau is not standard")
    return len(vals)


# -------------------------------------------------------------------- RSK

def rsk_step(rows: Rows, z: int) -> tuple[Rows, int]:
    rows = _copy(rows)
    p = 0
    while True:
        if p == len(rows):
            rows.append([z])
            return rows, p
        row = rows[p]
        k = next((k for k, a in enumerate(row) if a > z), None)
        if k is None:
            row.append(z)
            return rows, p
        row[k], z = z, row[k]
        p += 1


def rsk_insert(w: Sequence[int]) -> InsertionPair:
    rows: Rows = []
    rec: Rows = []
    for i, z in enumerate(_unprimed(w), start=1):
        rows, r = rsk_step(rows, z)
        _add_record(rec, r, code(i))
    return InsertionPair(_tableau("ordinary", rows), _tableau("ordinary", rec))


def rsk_inverse(pair: InsertionPair | tuple[Tableau, Tableau]) -> tuple[int, ...]:
    P, Q = pair
    n = _check_recording(P, Q)
    rows, rec = _rows_of(P), _rows_of(Q)
    out = []
    for k in range(n, 0, -1):
        r = _position_of(rec, k)
        rec[r].pop()
        x = rows[r].pop()
        for p in range(r - 1, -1, -1):
            row = rows[p]
            j = max((j for j, a in enumerate(row) if a < x), default=None)
            if j is None:
                raise InsertionError("malformed RSK pair")
            row[j], x = x, row[j]
        out.append(x)
        while rows and not rows[-1]:
            rows.pop()
            rec.pop()
    w = tuple(reversed(out))
    if rsk_insert(w) != (P, Q):
        raise InsertionError("malformed RSK pair")
    return w


# ---------------------------------------------------------- mixed insertion

def _column_cells(rows: Rows, q: int) -> list[int]:
    """0-based rows that have a cell in (1-based) column q."""
    return [p for p in range(min(q, len(rows))) if p + len(rows[p]) >= q]


def mixed_step(rows: Rows, z: int) -> tuple[Rows, int]:
    """Insert an unprimed letter; returns the new rows and the row of the
    new cell.  Unprimed letters travel along rows, primed ones along
    columns, and a letter bumped off the diagonal is primed."""
    rows = _copy(rows)
    mode, p, q = "row", 0, 0
    while True:
        if mode == "row":
            if p == len(rows):
                rows.append([z])
                return rows, p
            row = rows[p]
            k = next((k for k, a in enumerate(row) if a > z), None)
            if k is None:
                row.append(z)
                return rows, p
            row[k], a = z, row[k]
            r, c = p, p + k + 1
        else:
            cells = _column_cells(rows, q)
            hit = next((r for r in cells if rows[r][q - r - 1] > z), None)
            if hit is None:
                r = cells[-1] + 1 if cells else 0
                if r >= len(rows) or r + len(rows[r]) != q - 1:
                    raise InsertionError("column insertion fell off the shape")
                rows[r].append(z)
                return rows, r
            a = rows[hit][q - hit - 1]
            rows[hit][q - hit - 1] = z
            r, c = hit, q
        if r + 1 == c:
            z, mode, q = prime(a), "col", c + 1
        elif is_primed(a):
            z, mode, q = a, "col", c + 1
        else:
            z, mode, p = a, "row", r + 1


def mixed_insert(w: Sequence[int]) -> InsertionPair:
    rows: Rows = []
    rec: Rows = []
    for i, z in enumerate(_unprimed(w), start=1):
        rows, r = mixed_step(rows, z)
        _add_record(rec, r, code(i))
    return InsertionPair(_tableau("shifted", rows), _tableau("shifted", rec))


def _mixed_unstep(rows: Rows, r: int) -> int:
    """Undo the insertion that created the last cell of row r (0-based)."""
    x = rows[r].pop()
    col = r + len(rows[r]) + 1
    if not rows[r]:
        rows.pop()
    mode = "col" if is_primed(x) else "row"
    p, q = r, col
    while True:
        if mode == "row":
            if p == 0:
                if is_primed(x):
                    raise UnreachablePair("primed letter left over")
                return x
            row = rows[p - 1]
            j = max((j for j, a in enumerate(row) if a < x), default=None)
            if j is None or j == 0:
                raise UnreachablePair("no reverse row bump")
            row[j], z = x, row[j]
            p, c = p - 1, p + j
            x = z
            if is_primed(z):
                mode, q = "col", c
        else:
            if q < 2:
                raise UnreachablePair("no column to the left")
            cells = _column_cells(rows, q - 1)
            hit = max((h for h in cells if rows[h][q - 2 - h] < x), default=None)
            if hit is None:
                raise UnreachablePair("no reverse column bump")
            z = rows[hit][q - 2 - hit]
            if hit + 1 == q - 1:
                rows[hit][q - 2 - hit] = unprime(x)
                if is_primed(z):
                    raise UnreachablePair("primed letter on the diagonal")
                x, mode, p = z, "row", hit
            else:
                rows[hit][q - 2 - hit] = x
                x = z
                if is_primed(z):
                    q = q - 1
                else:
                    mode, p = "row", hit


def mixed_inverse(pair: InsertionPair | tuple[Tableau, Tableau]) -> tuple[int, ...]:
    """Recover the word from a mixed pair; pairs outside the image raise
    UnreachablePair (checked by replaying the insertion)."""
    P, Q = pair
    n = _check_recording(P, Q)
    rows, rec = _rows_of(P), _rows_of(Q)
    out = []
    try:
        for k in range(n, 0, -1):
            r = _position_of(rec, k)
            rec[r].pop()
            if not rec[r]:
                rec.pop()
            out.append(_mixed_unstep(rows, r))
    except (IndexError, InsertionError) as e:
        raise UnreachablePair(str(e)) from None
    w = tuple(reversed(out))
    if mixed_insert(w) != (P, Q):
        raise UnreachablePair("pair is not produced by mixed insertion")
    return w


# -------------------------------------------------------- shifted insertion

def shifted_step(rows: Rows, z: int) -> tuple[Rows, int, bool]:
    """Sagan's shifted insertion.  Returns the row of the new cell and
    whether the move ended in column (non-Schensted) mode."""
    rows = _copy(rows)
    p = 0
    while True:
        if p == len(rows):
            rows.append([z])
            return rows, p, False
        row = rows[p]
        k = next((k for k, a in enumerate(row) if a > z), None)
        if k is None:
            row.append(z)
            return rows, p, False
        row[k], z = z, row[k]
        if k == 0:
            break
        p += 1
    q = p + 2
    while True:
        cells = _column_cells(rows, q)
        hit = next((r for r in cells if rows[r][q - r - 1] >= z), None)
        if hit is None:
            r = cells[-1] + 1 if cells else 0
            rows[r].append(z)
            return rows, r, True
        rows[hit][q - hit - 1], z = z, rows[hit][q - hit - 1]
        q += 1


def shifted_insert(w: Sequence[int]) -> InsertionPair:
    rows: Rows = []
    rec: Rows = []
    for i, z in enumerate(_unprimed(w), start=1):
        rows, r, col = shifted_step(rows, z)
        _add_record(rec, r, code(i, col))
    return InsertionPair(_tableau("shifted", rows), _tableau("shifted", rec))


def shifted_inverse(pair: InsertionPair | tuple[Tableau, Tableau]) -> tuple[int, ...]:
    P, Q = pair
    n = _check_recording(P, Q)
    rows, rec = _rows_of(P), _rows_of(Q)
    out = []
    try:
        for k in range(n, 0, -1):
            r = _position_of(rec, k)
            col_mode = is_primed(rec[r].pop())
            if not rec[r]:
                rec.pop()
            x = rows[r].pop()
            q = r + len(rows[r]) + 1
            if not rows[r]:
                rows.pop()
            p = r
            if col_mode:
                while True:
                    cells = _column_cells(rows, q - 1)
                    h = max(h for h in cells if rows[h][q - 2 - h] <= x)
                    rows[h][q - 2 - h], x = x, rows[h][q - 2 - h]
                    if h + 1 == q - 1:
                        p = h
                        break
                    q -= 1
            for pp in range(p - 1, -1, -1):
                row = rows[pp]
                j = max(j for j, a in enumerate(row) if a < x)
                row[j], x = x, row[j]
            out.append(x)
    except (ValueError, IndexError):
        raise InsertionError("malformed shifted pair") from None
    w = tuple(reversed(out))
    if shifted_insert(w) != (P, Q):
        raise InsertionError("malformed shifted pair")
    return w


# ----------------------------------------------------------- SK insertion

def hook_split(w: Sequence[int]) -> HookSplit:
    w = tuple(w)
    if not w or not is_hook_word(w):
        raise InsertionError(f"{w} is not a hook word")
    m = 1
    while m < len(w) and w[m - 1] > w[m]:
        m += 1
    return HookSplit(w[:m], w[m:], w[:m - 1], w[m - 1:])


def sk_row_insert(w: Sequence[int], x: int) -> tuple[tuple[int, ...], int | None]:
    """Insert x into the hook word w.  Returns the new row and the bumped
    letter (None when x was appended)."""
    w = tuple(w)
    if not w or is_hook_word(w + (x,)):
        return w + (x,), None
    dec, inc, _, _ = hook_split(w)
    m = len(dec)
    j = m + next(k for k, y in enumerate(inc) if y > x)
    yj = w[j]
    i = next(k for k, y in enumerate(dec) if y <= yj)
    out = list(w)
    out[j], out[i] = x, yj
    return tuple(out), w[i]


def sk_step(rows: Rows, z: int) -> tuple[Rows, int]:
    rows = _copy(rows)
    p = 0
    while True:
        if p == len(rows):
            rows.append([z])
            return rows, p
        new, bumped = sk_row_insert(rows[p], z)
        rows[p] = list(new)
        if bumped is None:
            return rows, p
        z = bumped
        p += 1


def sk_insert(w: Sequence[int]) -> InsertionPair:
    rows: Rows = []
    rec: Rows = []
    for i, z in enumerate(_unprimed(w), start=1):
        rows, r = sk_step(rows, z)
        _add_record(rec, r, code(i))
    return InsertionPair(_tableau("shifted", rows), _tableau("shifted", rec))


def sk_reverse_I(R: Sequence[int], r: int) -> tuple[int, ...]:
    """Put r into the decreasing part of the hook word R, moving the
    displaced letter into the increasing part."""
    R = tuple(R)
    dec, inc, _, _ = hook_split(R)
    i = max((k for k, s in enumerate(dec) if s >= r), default=None)
    if i is None:
        raise InsertionError(f"no letter >= {r} in the decreasing part of {R}")
    s = dec[i]
    new_dec = dec[:i] + (r,) + dec[i + 1:]
    new_inc = tuple(sorted(inc + (s,)))
    return new_dec + new_inc


def sk_reverse_II(w: Sequence[int], x: int) -> tuple[tuple[int, ...], int, int | None]:
    """Reverse SK insertion of type II.  Returns (new word, y, z) where y is
    the letter displaced by x and z the letter pushed out of the weakly
    increasing part (None if y was merged into it instead)."""
    w = tuple(w)
    _, _, sdec, winc = hook_split(w)
    if not sdec or x > w[0]:
        raise InsertionError("reverse insertion of type II does not apply")
    i = max(k for k, s in enumerate(sdec) if s >= x)
    y = w[i]
    m1 = len(sdec)
    j = max((k for k, s in enumerate(winc) if s < y), default=None)
    if j is None:
        new = sdec[:i] + (x,) + sdec[i + 1:] + tuple(sorted(winc + (y,)))
        return new, y, None
    out = list(w)
    out[i] = x
    z = out[m1 + j]
    out[m1 + j] = y
    return tuple(out), y, z


def sk_inverse(pair: InsertionPair | tuple[Tableau, Tableau]) -> tuple[int, ...]:
    P, Q = pair
    n = _check_recording(P, Q)
    rows, rec = _rows_of(P), _rows_of(Q)
    out = []
    try:
        for k in range(n, 0, -1):
            r = _position_of(rec, k)
            rec[r].pop()
            if not rec[r]:
                rec.pop()
            x = rows[r].pop()
            if not rows[r]:
                rows.pop()
            for p in range(r - 1, -1, -1):
                new, _, z = sk_reverse_II(rows[p], x)
                if z is None:
                    raise InsertionError("reverse bump found no letter")
                rows[p] = list(new)
                x = z
            out.append(x)
    except (ValueError, IndexError, StopIteration):
        raise InsertionError("malformed SK pair") from None
    w = tuple(reversed(out))
    if sk_insert(w) != (P, Q):
        raise InsertionError("malformed SK pair")
    return w


INSERTIONS = {"rsk": rsk_insert, "mixed": mixed_insert, "shifted": shifted_insert, "sk": sk_insert}
INVERSES = {"rsk": rsk_inverse, "mixed": mixed_inverse, "shifted": shifted_inverse, "sk": sk_inverse}
