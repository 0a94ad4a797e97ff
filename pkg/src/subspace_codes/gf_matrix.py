"""Dense matrices over a finite field.

Entries are the integer codes used by :class:`~subspace_codes.finite_field.Field`.
Over GF(2) each row is also available as a packed int (column 0 is the
most significant bit), and the rank/RREF routines switch to word-parallel
XOR elimination on that representation.  ``gf2_rank_batch`` runs the same
elimination over a whole numpy batch of small matrices at once; the
pairwise distance scans depend on it.

Column indices are 0-based here; the CLI reports them 1-based.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .finite_field import Field


class GFMatrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Iterable[Sequence[int]], ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"row of length {len(r)} in a matrix with {ncols} columns")
            for x in r:
                if not 0 <= x < field.q:
                    raise ValueError(f"entry {x} is not in {field}")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows: tuple[tuple[int, ...], ...] = rows

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> GFMatrix:
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> GFMatrix:
        return cls(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_packed(cls, rows: Iterable[int], ncols: int) -> GFMatrix:
        """A GF(2) matrix from packed rows."""
        from .finite_field import Field

        return cls(Field(2), [unpack_row(r, ncols) for r in rows], ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GFMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"GFMatrix({self.field!r}, {self.nrows}x{self.ncols}, [{body}])"

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def packed(self) -> list[int]:
        if self.field.q != 2:
            raise ValueError("bit packing is only defined over GF(2)")
        return [pack_row(r) for r in self.rows]

    def transpose(self) -> GFMatrix:
        return GFMatrix(
            self.field, [[r[j] for r in self.rows] for j in range(self.ncols)], self.nrows
        )

    def _same_shape(self, other: GFMatrix) -> None:
        if self.field != other.field:
            raise TypeError(f"field mismatch: {self.field} vs {other.field}")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: GFMatrix) -> GFMatrix:
        self._same_shape(other)
        add = self.field.add
        return GFMatrix(
            self.field,
            [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __sub__(self, other: GFMatrix) -> GFMatrix:
        self._same_shape(other)
        sub = self.field.sub
        return GFMatrix(
            self.field,
            [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def scale(self, c: int) -> GFMatrix:
        mul = self.field.mul
        return GFMatrix(self.field, [[mul(c, a) for a in r] for r in self.rows], self.ncols)

    def __matmul__(self, other: GFMatrix) -> GFMatrix:
        if self.field != other.field:
            raise TypeError(f"field mismatch: {self.field} vs {other.field}")
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        cols = other.transpose().rows
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = f.add(acc, f.mul(a, b))
                row.append(acc)
            out.append(row)
        return GFMatrix(f, out, other.ncols)

    def rref(self) -> tuple[GFMatrix, list[int]]:
        return rref(self)

    def rank(self) -> int:
        return rank(self)


# -- GF(2) packed rows ---------------------------------------------------------

def pack_row(row: Sequence[int]) -> int:
    out = 0
    for x in row:
        out = (out << 1) | (x & 1)
    return out


def unpack_row(word: int, ncols: int) -> tuple[int, ...]:
    return tuple((word >> (ncols - 1 - j)) & 1 for j in range(ncols))


def gf2_rref_packed(rows: Iterable[int], ncols: int) -> tuple[list[int], list[int]]:
    """RREF of packed GF(2) rows; returns (nonzero rows, 0-based pivot columns)."""
    work = [r for r in rows if r]
    out: list[int] = []
    pivots: list[int] = []
    for col in range(ncols):
        bit = 1 << (ncols - 1 - col)
        for idx, r in enumerate(work):
            if r & bit:
                break
        else:
            continue
        pivot = work.pop(idx)
        work = [r ^ pivot if r & bit else r for r in work]
        out = [r ^ pivot if r & bit else r for r in out]
        out.append(pivot)
        pivots.append(col)
        work = [r for r in work if r]
        if not work:
            break
    return out, pivots


def gf2_rank_packed(rows: Iterable[int]) -> int:
    """Rank of packed GF(2) rows (bit order does not matter)."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def gf2_rank_batch(rows: np.ndarray, ncols: int) -> np.ndarray:
    """Ranks of a batch of packed GF(2) matrices.

    ``rows`` has shape (batch, r) with unsigned integer dtype, one packed
    row per entry.  Elimination proceeds one column at a time for the whole
    batch.
    """
    work = np.array(rows, copy=True)
    if work.ndim != 2:
        raise ValueError("expected a (batch, rows) array")
    batch, r = work.shape
    ranks = np.zeros(batch, dtype=np.int64)
    if batch == 0 or r == 0:
        return ranks
    idx = np.arange(batch)
    one = work.dtype.type(1)
    zero = work.dtype.type(0)
    for col in range(ncols):
        shift = work.dtype.type(ncols - 1 - col)
        has_bit = ((work >> shift) & one).astype(bool)
        found = has_bit.any(axis=1)
        if not found.any():
            continue
        piv = has_bit.argmax(axis=1)
        pivot_rows = work[idx, piv]
        has_bit[idx, piv] = False
        has_bit &= found[:, None]
        work ^= np.where(has_bit, pivot_rows[:, None], zero)
        # a used pivot row keeps its bit only at this column, so zero it out
        # for later columns by clearing it from the working set
        work[idx[found], piv[found]] = zero
        ranks += found
    return ranks


# -- generic elimination -------------------------------------------------------

def _rref_rows(field: Field, rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    lead = 0
    for col in range(ncols):
        if lead == len(rows):
            break
        sel = next((i for i in range(lead, len(rows)) if rows[i][col]), None)
        if sel is None:
            continue
        rows[lead], rows[sel] = rows[sel], rows[lead]
        inv = field.inv(rows[lead][col])
        if inv != 1:
            rows[lead] = [field.mul(inv, x) for x in rows[lead]]
        prow = rows[lead]
        for i in range(len(rows)):
            if i != lead and rows[i][col]:
                c = rows[i][col]
                rows[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(rows[i], prow)]
        pivots.append(col)
        lead += 1
    return rows[:lead], pivots


def rref(m: GFMatrix) -> tuple[GFMatrix, list[int]]:
    """Reduced row echelon form with zero rows removed, and its pivot columns."""
    if m.field.q == 2:
        packed, pivots = gf2_rref_packed(m.packed(), m.ncols)
        return GFMatrix(m.field, [unpack_row(r, m.ncols) for r in packed], m.ncols), pivots
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.rows], m.ncols)
    return GFMatrix(m.field, rows, m.ncols), pivots


def rank(m: GFMatrix) -> int:
    if m.field.q == 2:
        return gf2_rank_packed(m.packed())
    return len(_rref_rows(m.field, [list(r) for r in m.rows], m.ncols)[1])


def kernel(m: GFMatrix) -> GFMatrix:
    """Basis of {x : m x = 0}, one basis vector per row."""
    f = m.field
    r, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        x = [0] * m.ncols
        x[free] = 1
        for row, p in zip(r.rows, pivots):
            x[p] = f.neg(row[free])
        basis.append(x)
    return GFMatrix(f, basis, m.ncols)


def stack(a: GFMatrix, b: GFMatrix) -> GFMatrix:
    if a.field != b.field:
        raise TypeError(f"field mismatch: {a.field} vs {b.field}")
    if a.ncols != b.ncols:
        raise ValueError(f"cannot stack {a.ncols} and {b.ncols} columns")
    return GFMatrix(a.field, a.rows + b.rows, a.ncols)
