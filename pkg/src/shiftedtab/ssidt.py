"""Semistandard increasing decomposition tableaux of shapes eps-(lam) and
eps+(lam).

eps-(D) is built from a decomposition tableau D by cutting out one lattice
path at a time; eps+(T) goes through the dual of the standardization of a
shifted tableau T.
"""

from __future__ import annotations

from typing import Sequence

from .core import (Tableau, TableauError, content_of, destandardize, dual_bar,
                   epsilon_shape, from_cells, shifted, standardize, transpose_eps,
                   validate)
from .insertion import InsertionError, mixed_insert, mixed_inverse, sk_insert, sk_reverse_I
from .words import read

Cell = tuple[int, int]
Path = tuple[Cell, ...]


def _entries(rows: Sequence[Sequence[int]]) -> dict[Cell, int]:
    return {(r, r + k): x for r, row in enumerate(rows, start=1) for k, x in enumerate(row)}


def _decreasing_parts(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    out = []
    for row in rows:
        m = 1
        while m < len(row) and row[m - 1] > row[m]:
            m += 1
        out.append(m)
    return tuple(out)


def _check_ssdt(D: Tableau) -> None:
    if not validate(D, "SSDT"):
        raise TableauError("not a semistandard decomposition tableau")


def initial_path(D: Tableau) -> Path:
    """Walk from (l, l) along the boundary of the shape mu of decreasing
    parts, then right along row 1."""
    _check_ssdt(D)
    rows = D.rows
    l = len(rows)
    if l == 0:
        return ()
    mu = _decreasing_parts(rows)
    in_mu = {(r, r + k) for r in range(1, l + 1) for k in range(mu[r - 1])}
    x, y = l, l
    path = [(x, y)]
    while x > 1:
        if (x, y + 1) in in_mu:
            y += 1
        else:
            x -= 1
        path.append((x, y))
    while y < len(rows[0]):
        y += 1
        path.append((1, y))
    return tuple(path)


def _corners(path: Path, shape: set[Cell]) -> list[int]:
    out = []
    for i in range(1, len(path) - 1):
        (x0, y0), (x, y), (x1, y1) = path[i - 1], path[i], path[i + 1]
        if (x0, y0) == (x + 1, y) and (x1, y1) == (x, y + 1) and (x + 1, y + 1) in shape:
            out.append(i)
    return out


def bend_to_fixpoint(D: Tableau, path: Path, order: str = "left") -> Path:
    """Bend at corners (x, y) whose entry is >= the entry at (x+1, y+1)
    until no corner bends.  order picks the scan direction; the result does
    not depend on it."""
    ent = _entries(D.rows)
    shape = set(ent)
    path = list(path)
    while True:
        corners = _corners(tuple(path), shape)
        if order == "right":
            corners.reverse()
        for i in corners:
            x, y = path[i]
            if ent[x, y] >= ent[x + 1, y + 1]:
                path[i] = (x + 1, y + 1)
                break
        else:
            return tuple(path)


def path_word(D: Tableau, path: Path) -> tuple[int, ...]:
    ent = _entries(D.rows)
    return tuple(ent[c] for c in path)


def _remove_path(rows: Sequence[Sequence[int]], path: Path) -> list[list[int]]:
    """Rows of the SSDT left once the path is cut out and the right parts
    are pushed up by reverse insertion of type I."""
    l = len(rows)
    on = set(path)
    left, right = [], []
    for r, row in enumerate(rows, start=1):
        cols = [(r + k, x) for k, x in enumerate(row)]
        pc = [c for c, _ in cols if (r, c) in on]
        lo = min(pc) if pc else None
        left.append([x for c, x in cols if (r, c) not in on and (lo is None or c < lo)])
        right.append([x for c, x in cols if (r, c) not in on and lo is not None and c > lo])
    new = []
    for i in range(l - 1):
        row = tuple(left[i])
        for r in reversed(right[i + 1]):
            row = sk_reverse_I(row, r)
        new.append(list(row))
    if any(right[0]) or left[l - 1]:
        raise TableauError("path does not split the tableau")
    return new


def ssdt_to_epsilon_minus(D: Tableau, order: str = "left") -> Tableau:
    _check_ssdt(D)
    lam = D.shape.outer
    n = lam[0] if lam else 0
    shape = epsilon_shape(lam, "-")
    cells: dict[Cell, int] = {}
    rows = [list(r) for r in D.rows]
    for i in range(1, len(lam) + 1):
        cur = shifted(tuple(len(r) for r in rows))
        T = Tableau(cur, tuple(tuple(r) for r in rows))
        p = bend_to_fixpoint(T, initial_path(T), order)
        wp = path_word(T, p)
        for k, x in enumerate(wp, start=1):
            r = n - k + 1
            cells[r, n + i - r] = x
        rows = _remove_path(rows, p)
    return from_cells(shape, cells)


def q0(lam: Sequence[int]) -> Tableau:
    """The standard shifted tableau numbered row by row."""
    rows, k = [], 1
    for part in lam:
        rows.append(tuple(2 * v for v in range(k, k + part)))
        k += part
    return Tableau(shifted(tuple(lam)), tuple(rows))


def shifted_to_epsilon_plus(T: Tableau, recording: Tableau | None = None) -> Tableau:
    """The five step construction; recording is the standard tableau used to
    pick a word for the dual tableau (row by row numbering by default)."""
    if T.shape.kind != "shifted" or T.shape.inner or not validate(T, "SSShYT"):
        raise TableauError("expected a semistandard shifted tableau")
    lam = T.shape.outer
    bar = dual_bar(standardize(T, keep_primes=True))
    w = mixed_inverse((bar, recording if recording is not None else q0(lam)))
    D = sk_insert(w).insertion
    E = ssdt_to_epsilon_minus(D)
    return destandardize(transpose_eps(E), content_of(T))


def epsilon_minus_of_word(w: Sequence[int]) -> Tableau:
    return ssdt_to_epsilon_minus(sk_insert(w).insertion)


def epsilon_plus_minus_transfer(S: Tableau) -> Tableau:
    """eps+ -> eps- (and back) through the common mixed insertion tableau."""
    if S.shape.kind == "eps+":
        return epsilon_minus_of_word(read(S))
    if S.shape.kind == "eps-":
        return shifted_to_epsilon_plus(mixed_insert(read(S)).insertion)
    raise TableauError("expected an eps tableau")


def is_ssidt(S: Tableau) -> bool:
    """Rows weakly increase and the reading word inserts to the right shape."""
    if S.shape.kind not in ("eps+", "eps-") or not validate(S, "SSIDT"):
        return False
    try:
        P = mixed_insert(read(S)).insertion
    except InsertionError:
        return False
    return P.shape.outer == S.shape.outer
