"""Linear rank-metric codes: Gabidulin MRD codes and their Ferrers-diagram subcodes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .ferrers_forms import FerrersDiagram, theorem1_bound
from .finite_field import Field, field_embed
from .gf_matrix import GFMatrix, gf2_rank_batch, kernel, rank

EXHAUSTION_GUARD = 1 << 20


def rank_distance(x: GFMatrix, y: GFMatrix) -> int:
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {y.shape}")
    return rank(x - y)


@dataclass(frozen=True)
class LinearMatrixCode:
    """A GF(q)-linear code of m x t matrices given by a basis.

    ``bound`` and ``attains_bound`` are filled in for Ferrers subcodes only.
    """

    field: Field
    m: int
    t: int
    basis: tuple[GFMatrix, ...]
    delta: int
    support: FerrersDiagram | None = None
    bound: int | None = None
    attains_bound: bool | None = None

    def __post_init__(self):
        for b in self.basis:
            if b.shape != (self.m, self.t):
                raise ValueError(f"basis matrix of shape {b.shape} in a {self.m}x{self.t} code")
        if self.basis:
            flat = GFMatrix(self.field, [sum(b.rows, ()) for b in self.basis], self.m * self.t)
            if rank(flat) != len(self.basis):
                raise ValueError("basis matrices are linearly dependent")
        if self.support is not None:
            for b in self.basis:
                for i, row in enumerate(b.rows):
                    for j, x in enumerate(row):
                        if x and not self.support.mask[i][j]:
                            raise ValueError("basis matrix has an entry outside the support")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.field.q ** self.dimension

    def combine(self, coeffs) -> GFMatrix:
        f = self.field
        rows = [[0] * self.t for _ in range(self.m)]
        for c, b in zip(coeffs, self.basis):
            if not c:
                continue
            for i, brow in enumerate(b.rows):
                row = rows[i]
                for j, x in enumerate(brow):
                    if x:
                        row[j] = f.add(row[j], f.mul(c, x))
        return GFMatrix(f, rows, self.t)

    def codewords(self) -> Iterator[GFMatrix]:
        """All codewords, coefficient vectors in lexicographic order."""
        if self.field.q == 2:
            for flat in self.packed_codewords():
                yield _unflatten(int(flat), self.m, self.t)
            return
        for coeffs in product(range(self.field.q), repeat=self.dimension):
            yield self.combine(coeffs)

    def packed_codewords(self) -> np.ndarray:
        """GF(2) only: every codeword flattened row-major into one int, lexicographic order."""
        if self.field.q != 2:
            raise ValueError("packed codewords are only defined over GF(2)")
        if self.m * self.t > 63:
            raise ValueError("matrix too large to pack into one word")
        words = np.zeros(1, dtype=np.uint64)
        for b in reversed(self.basis):
            flat = np.uint64(_flatten(b))
            words = np.concatenate([words, words ^ flat])
        return words


def _flatten(b: GFMatrix) -> int:
    out = 0
    for row in b.rows:
        for x in row:
            out = (out << 1) | x
    return out


def _unflatten(word: int, m: int, t: int) -> GFMatrix:
    from .finite_field import Field

    bits = [(word >> (m * t - 1 - i)) & 1 for i in range(m * t)]
    return GFMatrix(Field(2), [bits[i * t : (i + 1) * t] for i in range(m)], t)


def gabidulin(field: Field, m: int, t: int, delta: int) -> LinearMatrixCode:
    """Gabidulin MRD code of m x t matrices with minimum rank distance delta.

    Messages are q-linearized polynomials sum a_i x^(q^i), i < L - delta + 1,
    over GF(q^M), M = max(m, t), L = min(m, t), evaluated at 1, a, ..., a^(L-1)
    for a the root of GF(q^M)'s modulus.  Each evaluation is expanded to an
    M-long q-ary column; the code is transposed when m < t.
    """
    if m < 1 or t < 1:
        raise ValueError(f"matrix shape must be positive, got {m}x{t}")
    big, small = max(m, t), min(m, t)
    if not 1 <= delta <= small:
        raise ValueError(f"delta must lie in [1, {small}], got {delta}")
    if field.e != 1:
        raise ValueError("Gabidulin codes are built over prime fields only")
    q = field.q
    ext = Field(field.p, big)
    points = [q**j for j in range(small)]
    basis = []
    for i in range(small - delta + 1):
        for j in range(big):
            coeff = q**j
            columns = [field_embed(field, ext, ext.mul(coeff, ext.pow(g, q**i))) for g in points]
            mat = GFMatrix(field, [[col[r] for col in columns] for r in range(big)], small)
            basis.append(mat if m >= t else mat.transpose())
    return LinearMatrixCode(field, m, t, tuple(basis), delta)


def ferrers_code(s: FerrersDiagram, delta: int, field: Field) -> LinearMatrixCode:
    """Largest zero-constrained Gabidulin subcode supported on the diagram S.

    The Gabidulin code is built on S's bounding box; the codewords vanishing
    on every non-dot cell of the box form the kernel of the map taking a
    coefficient vector to those cells' entries.  Returned matrices have S's
    full k x t shape.
    """
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    bound = theorem1_bound(s, delta)
    m, t = s.box_rows, s.box_cols
    if m == 0 or delta > min(m, t):
        return LinearMatrixCode(field, s.k, s.t, (), delta, s, bound, bound == 0)
    mrd = gabidulin(field, m, t, delta)
    off = [(i, j) for i in range(m) for j in range(t) if not s.mask[i][j]]
    if off:
        constraints = GFMatrix(field, [[b[i, j] for b in mrd.basis] for i, j in off], mrd.dimension)
        coeff_rows = kernel(constraints).rows
    else:
        coeff_rows = GFMatrix.identity(field, mrd.dimension).rows
    padding = [[0] * t for _ in range(s.k - m)]
    basis = []
    for coeffs in coeff_rows:
        boxed = mrd.combine(coeffs)
        basis.append(GFMatrix(field, list(boxed.rows) + padding, t))
    dim = len(basis)
    return LinearMatrixCode(field, s.k, s.t, tuple(basis), delta, s, bound, dim == bound)


def min_rank_distance(code: LinearMatrixCode) -> float:
    """Minimum rank over nonzero codewords; ``math.inf`` for the zero code."""
    if code.dimension == 0:
        return math.inf
    if code.size > EXHAUSTION_GUARD:
        raise ValueError(f"{code.size} codewords exceed the exhaustion guard {EXHAUSTION_GUARD}")
    if code.field.q == 2 and code.m * code.t <= 63:
        words = code.packed_codewords()[1:]
        row_mask = np.uint64((1 << code.t) - 1)
        rows = np.stack(
            [(words >> np.uint64(code.t * (code.m - 1 - i))) & row_mask for i in range(code.m)],
            axis=1,
        )
        return int(gf2_rank_batch(rows, code.t).min())
    best = math.inf
    for cw in code.codewords():
        if not cw.is_zero():
            best = min(best, rank(cw))
    return best

