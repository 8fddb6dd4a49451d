"""Exact dense row-reduction over Q and F_p.

Matrices are tuples of dense row tuples holding raw scalars.  The
elimination kernel mutates row lists in place and branches once on the
characteristic so the inner loops stay free of per-entry dispatch.
Pivoting picks the first nonzero entry left to right; with exact
arithmetic there is nothing to gain from magnitude pivoting and the
result is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .fields import Field, Scalar

Vector = tuple


@dataclass(frozen=True)
class Matrix:
    """A dense matrix over a single field; all rows have length `ncols`."""

    field: Field
    ncols: int
    rows: tuple[Vector, ...]

    @property
    def nrows(self) -> int:
        return len(self.rows)


def matrix(field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> Matrix:
    """Build a Matrix, normalizing every entry into the field."""
    norm = field.normalize
    out = tuple(tuple(norm(x) for x in row) for row in rows)
    if out:
        width = len(out[0])
        for row in out:
            if len(row) != width:
                raise ValueError("rows have unequal lengths")
    else:
        width = 0
    if ncols is None:
        ncols = width
    elif out and width != ncols:
        raise ValueError(f"rows have {width} columns, expected {ncols}")
    return Matrix(field, ncols, out)


def from_entries(field: Field, nrows: int, ncols: int,
                 entries: Iterable[tuple[int, int, Scalar]]) -> Matrix:
    """Sparse construction helper: build from (row, col, value) triples."""
    zero = field.zero
    data = [[zero] * ncols for _ in range(nrows)]
    add = field.add
    for r, c, v in entries:
        data[r][c] = add(data[r][c], field.normalize(v))
    return Matrix(field, ncols, tuple(tuple(row) for row in data))


def transpose(m: Matrix) -> Matrix:
    zero = m.field.zero
    cols = [[zero] * m.nrows for _ in range(m.ncols)]
    for r, row in enumerate(m.rows):
        for c, v in enumerate(row):
            if v:
                cols[c][r] = v
    return Matrix(m.field, m.nrows, tuple(tuple(col) for col in cols))


def echelon_rows(field: Field, rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduce row lists in place to RREF; return (nonzero rows, pivot columns).

    Rows are consumed: the input list is reordered and overwritten.  Each
    returned row has a leading 1 at its pivot column and zeros in every
    other pivot column.
    """
    char = field.char
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != 1:
            if char:
                inv = pow(pv, char - 2, char)
                prow[c:] = [(x * inv) % char for x in prow[c:]]
            else:
                inv = 1 / Fraction(pv)
                prow[c:] = [x * inv for x in prow[c:]]
        tail = prow[c:]
        if char:
            for i in range(r + 1, nrows):
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    ri[c:] = [a if not b else (a - f * b) % char
                              for a, b in zip(ri[c:], tail)]
        else:
            for i in range(r + 1, nrows):
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    ri[c:] = [a if not b else a - f * b
                              for a, b in zip(ri[c:], tail)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    rank = r
    # back-substitution: clear entries above each pivot
    for r in range(rank - 1, 0, -1):
        c = pivots[r]
        tail = rows[r][c:]
        if char:
            for i in range(r):
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    ri[c:] = [a if not b else (a - f * b) % char
                              for a, b in zip(ri[c:], tail)]
        else:
            for i in range(r):
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    ri[c:] = [a if not b else a - f * b
                              for a, b in zip(ri[c:], tail)]
    return rows[:rank], pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Reduced row-echelon form: (rref matrix, pivot columns, rank).

    The returned matrix keeps the input's shape, with zero rows at the
    bottom; its row space equals the input's.
    """
    work = [list(row) for row in m.rows]
    kept, pivots = echelon_rows(m.field, work)
    rank = len(kept)
    zero_row = (m.field.zero,) * m.ncols
    rows = tuple(tuple(r) for r in kept) + (zero_row,) * (m.nrows - rank)
    return Matrix(m.field, m.ncols, rows), tuple(pivots), rank


def rank(m: Matrix) -> int:
    return rref(m)[2]


def _pivot_of(row: Sequence) -> int:
    for c, v in enumerate(row):
        if v:
            return c
    return -1


def residue_list(field: Field, vec: list, rows: Sequence[Sequence],
                 pivots: Sequence[int]) -> list:
    """Eliminate `vec` (in place) against echelon rows with unit pivots."""
    char = field.char
    if char:
        for r, c in enumerate(pivots):
            f = vec[c]
            if f:
                row = rows[r]
                vec[c:] = [a if not b else (a - f * b) % char
                           for a, b in zip(vec[c:], row[c:])]
    else:
        for r, c in enumerate(pivots):
            f = vec[c]
            if f:
                row = rows[r]
                vec[c:] = [a if not b else a - f * b
                           for a, b in zip(vec[c:], row[c:])]
    return vec


def residue(vec: Sequence, basis: Matrix) -> Vector:
    """Canonical representative of `vec` modulo the row space of `basis`.

    `basis` must be in (reduced) row-echelon form.  The result is zero
    iff `vec` lies in the row space, and residue is idempotent.
    """
    if len(vec) != basis.ncols:
        raise ValueError(f"vector has {len(vec)} entries, matrix has {basis.ncols} columns")
    field = basis.field
    out = [field.normalize(x) for x in vec]
    div = field.div
    sub = field.sub
    mul = field.mul
    for row in basis.rows:
        c = _pivot_of(row)
        if c < 0:
            continue
        f = out[c]
        if f:
            factor = f if row[c] == 1 else div(f, row[c])
            for j in range(c, basis.ncols):
                if row[j]:
                    out[j] = sub(out[j], mul(factor, row[j]))
    return tuple(out)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right null space {v : m @ v = 0}; ncols - rank vectors."""
    red, pivots, rk = rref(m)
    field = m.field
    zero = field.zero
    neg = field.neg
    pivot_set = set(pivots)
    out = []
    for j in range(m.ncols):
        if j in pivot_set:
            continue
        v = [zero] * m.ncols
        v[j] = field.one
        for r, c in enumerate(pivots):
            x = red.rows[r][j]
            if x:
                v[c] = neg(x)
        out.append(tuple(v))
    return out


def row_space_contains(basis: Matrix, vectors: Iterable[Sequence]) -> bool:
    """True iff every vector's residue against the RREF `basis` vanishes."""
    return all(not any(residue(v, basis)) for v in vectors)


def mutual_residues_vanish(a: Matrix, b: Matrix) -> bool:
    """Row spaces of two RREF matrices coincide (mutual containment)."""
    if a.field != b.field:
        raise ValueError("matrices live over different fields")
    if a.ncols != b.ncols:
        raise ValueError("matrices have different widths")
    return row_space_contains(a, (r for r in b.rows if any(r))) and \
        row_space_contains(b, (r for r in a.rows if any(r)))
