"""Echelon Ferrers forms, their Ferrers diagrams, and lifting fillings to subspaces.

For a binary vector v of weight k, EF(v) is the k x n RREF pattern with
pivots on the support of v; the free ("dot") entries of row i are the
non-pivot columns to the right of row i's pivot.  The Ferrers diagram S
keeps only the columns of EF(v) that contain a dot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .finite_field import Field
from .gf_matrix import GFMatrix
from .subspace_core import Subspace

DOT = "•"


def as_binary_vector(v: Sequence[int] | str) -> tuple[int, ...]:
    if isinstance(v, str):
        v = [int(ch) for ch in v.strip()]
    out = tuple(int(x) for x in v)
    if any(x not in (0, 1) for x in out):
        raise ValueError(f"not a binary vector: {v}")
    return out


def vector_str(v: Sequence[int]) -> str:
    return "".join(str(x) for x in v)


@dataclass(frozen=True)
class EchelonFerrersForm:
    v: tuple[int, ...]
    pivots: tuple[int, ...]
    dots: tuple[tuple[bool, ...], ...]

    @property
    def k(self) -> int:
        return len(self.pivots)

    @property
    def n(self) -> int:
        return len(self.v)

    def dot_count(self) -> int:
        return sum(sum(row) for row in self.dots)

    def render(self) -> str:
        lines = []
        for i, row in enumerate(self.dots):
            cells = []
            for j, is_dot in enumerate(row):
                cells.append(DOT if is_dot else "1" if j == self.pivots[i] else "0")
            lines.append(" ".join(cells))
        return "\n".join(lines)


@dataclass(frozen=True)
class FerrersDiagram:
    """The dot sub-matrix S of EF(v).

    ``columns`` are the 0-based columns of EF(v) that S keeps; ``mask`` is
    k x len(columns).  Dots are top-aligned and right-justified, so the
    rows holding a dot are exactly the first ``box_rows`` rows.
    """

    v: tuple[int, ...]
    columns: tuple[int, ...]
    mask: tuple[tuple[bool, ...], ...]

    @property
    def k(self) -> int:
        return len(self.mask)

    @property
    def t(self) -> int:
        return len(self.columns)

    @property
    def dots(self) -> int:
        return sum(sum(row) for row in self.mask)

    @property
    def row_counts(self) -> list[int]:
        return [sum(row) for row in self.mask]

    @property
    def col_counts(self) -> list[int]:
        return [sum(row[j] for row in self.mask) for j in range(self.t)]

    @property
    def box_rows(self) -> int:
        return sum(1 for c in self.row_counts if c)

    @property
    def box_cols(self) -> int:
        return self.t

    def trimmed_mask(self) -> tuple[tuple[bool, ...], ...]:
        return self.mask[: self.box_rows]

    def render(self) -> str:
        return "\n".join(" ".join(DOT if d else "0" for d in row) for row in self.mask)


def echelon_ferrers_form(v: Sequence[int] | str) -> EchelonFerrersForm:
    v = as_binary_vector(v)
    pivots = tuple(j for j, x in enumerate(v) if x)
    if not pivots:
        raise ValueError("the zero vector has no echelon Ferrers form")
    pivot_set = set(pivots)
    dots = tuple(
        tuple(j > p and j not in pivot_set for j in range(len(v))) for p in pivots
    )
    return EchelonFerrersForm(v, pivots, dots)


def diagram_of(v: Sequence[int] | str) -> FerrersDiagram:
    ef = echelon_ferrers_form(v)
    columns = tuple(j for j in range(ef.n) if any(row[j] for row in ef.dots))
    mask = tuple(tuple(row[j] for j in columns) for row in ef.dots)
    return FerrersDiagram(ef.v, columns, mask)


def theorem1_bound(s: FerrersDiagram, delta: int) -> int:
    """Upper bound on the dimension of a linear rank-distance-delta code on S.

    The smaller of the dot count in the last m - delta + 1 rows and in the
    first t - delta + 1 columns, with m x t the bounding box of the dots.
    """
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    m, t = s.box_rows, s.box_cols
    row_window = m - delta + 1
    col_window = t - delta + 1
    if row_window <= 0 or col_window <= 0:
        return 0
    rows = s.row_counts[:m]
    by_rows = sum(rows[m - row_window :])
    by_cols = sum(s.col_counts[:col_window])
    return min(by_rows, by_cols)


def fits_diagram(s: FerrersDiagram, m: GFMatrix) -> bool:
    """Whether M is "in EF(v)": same shape as S and zero off the dots."""
    if m.shape != (s.k, s.t):
        return False
    return all(
        not x or is_dot for row, mask_row in zip(m.rows, s.mask) for x, is_dot in zip(row, mask_row)
    )


def lift(v: Sequence[int] | str, m: GFMatrix) -> Subspace:
    """The subspace spanned by EF(v[M]); its generator is already in RREF."""
    s = diagram_of(v)
    if m.shape != (s.k, s.t):
        raise ValueError(f"filling of shape {m.shape} does not match S of shape {(s.k, s.t)}")
    if not fits_diagram(s, m):
        raise ValueError("filling has a nonzero entry outside the Ferrers diagram")
    n = len(s.v)
    pivots = [j for j, x in enumerate(s.v) if x]
    rows = []
    for i, p in enumerate(pivots):
        row = [0] * n
        row[p] = 1
        for c, x in zip(s.columns, m.rows[i]):
            row[c] = x
        rows.append(row)
    return Subspace(GFMatrix(m.field, rows, n), pivots, trusted=True)


def filling_of(u: Subspace, s: FerrersDiagram | None = None) -> GFMatrix:
    """Recover M from a lifted subspace EF(v[M]) by reading S's columns."""
    if s is None:
        from .subspace_core import identifying_vector

        s = diagram_of(identifying_vector(u))
    if u.dim != s.k:
        raise ValueError("subspace dimension does not match the diagram")
    return GFMatrix(u.field, [[row[c] for c in s.columns] for row in u.rows], s.t)


def zero_filling(field: Field, s: FerrersDiagram) -> GFMatrix:
    return GFMatrix.zeros(field, s.k, s.t)
