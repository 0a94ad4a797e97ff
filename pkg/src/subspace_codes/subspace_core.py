"""Subspaces of F_q^n in canonical RREF form and the subspace distance."""

from __future__ import annotations

from typing import Iterable, Sequence

from .finite_field import Field
from .gf_matrix import GFMatrix, kernel, rank, rref, stack

GRASSMANNIAN_GUARD = 1 << 10


class Subspace:
    """A subspace held as its RREF generator (k x n, no zero rows).

    Equality and hashing use the generator, so two Subspaces are equal iff
    they span the same space.
    """

    __slots__ = ("field", "n", "generator", "pivots")

    def __init__(self, generator: GFMatrix, pivots: Sequence[int] | None = None, *, trusted: bool = False):
        if not trusted:
            generator, pivots = rref(generator)
        elif pivots is None:
            pivots = [next(j for j, x in enumerate(row) if x) for row in generator.rows]
        self.field: Field = generator.field
        self.n: int = generator.ncols
        self.generator = generator
        self.pivots: tuple[int, ...] = tuple(pivots)

    @property
    def dim(self) -> int:
        return self.generator.nrows

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.generator.rows

    def key(self) -> tuple:
        return (self.n, self.generator.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.field == other.field and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __lt__(self, other: Subspace) -> bool:
        return (self.dim, self.generator.rows) < (other.dim, other.generator.rows)

    def __repr__(self) -> str:
        body = ";".join("".join(str(x) for x in r) for r in self.rows)
        return f"Subspace(n={self.n}, k={self.dim}, [{body}])"

    def packed(self) -> list[int]:
        return self.generator.packed()

    def contains(self, vector: Sequence[int]) -> bool:
        if len(vector) != self.n:
            raise ValueError(f"vector of length {len(vector)} in F_q^{self.n}")
        v = GFMatrix(self.field, [vector], self.n)
        return rank(stack(self.generator, v)) == self.dim

    def contains_subspace(self, other: Subspace) -> bool:
        _check_compatible(self, other)
        return rank(stack(self.generator, other.generator)) == self.dim


def _check_compatible(u: Subspace, v: Subspace) -> None:
    if u.field != v.field:
        raise TypeError(f"field mismatch: {u.field} vs {v.field}")
    if u.n != v.n:
        raise ValueError(f"ambient mismatch: F^{u.n} vs F^{v.n}")


def subspace_from_rows(field: Field, n: int, rows: Iterable[Sequence[int]]) -> Subspace:
    rows = [tuple(r) for r in rows]
    for r in rows:
        if len(r) != n:
            raise ValueError(f"row of length {len(r)} does not lie in F_q^{n}")
    return Subspace(GFMatrix(field, rows, n))


def zero_space(field: Field, n: int) -> Subspace:
    return Subspace(GFMatrix(field, [], n), [], trusted=True)


def full_space(field: Field, n: int) -> Subspace:
    return Subspace(GFMatrix.identity(field, n), range(n), trusted=True)


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """dim U + dim V - 2 dim(U n V), via dim(U + V) = rank of the stacked generators."""
    _check_compatible(u, v)
    return 2 * rank(stack(u.generator, v.generator)) - u.dim - v.dim


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """U n V: solve a U-combination = b V-combination through the kernel of [U; -V]^T."""
    _check_compatible(u, v)
    f = u.field
    if u.dim == 0 or v.dim == 0:
        return zero_space(f, u.n)
    neg_v = GFMatrix(f, [[f.neg(x) for x in r] for r in v.rows], u.n)
    relations = kernel(stack(u.generator, neg_v).transpose())
    vectors = []
    for coeffs in relations.rows:
        vec = [0] * u.n
        for c, row in zip(coeffs[: u.dim], u.rows):
            if c:
                vec = [f.add(x, f.mul(c, y)) for x, y in zip(vec, row)]
        vectors.append(vec)
    return subspace_from_rows(f, u.n, vectors)


def identifying_vector(u: Subspace) -> tuple[int, ...]:
    """Binary vector with ones at the pivot columns of U's generator."""
    out = [0] * u.n
    for p in u.pivots:
        out[p] = 1
    return tuple(out)


def gaussian_coefficient(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    return num // den


def enumerate_grassmannian(field: Field, n: int, k: int) -> list[Subspace]:
    """All k-dimensional subspaces of F_q^n, by brute-force growth.

    Each (j+1)-space is found by adjoining every vector to every j-space and
    canonicalizing; no echelon-pattern reasoning is involved, so the result
    can serve as an independent check on the Ferrers-form machinery.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if field.q**n > GRASSMANNIAN_GUARD:
        raise ValueError(f"q^n = {field.q ** n} exceeds the enumeration guard {GRASSMANNIAN_GUARD}")
    vectors = []
    for idx in range(1, field.q**n):
        vectors.append([(idx // field.q**j) % field.q for j in range(n)])
    level = {zero_space(field, n)}
    for _ in range(k):
        nxt = set()
        for u in level:
            for vec in vectors:
                if not u.contains(vec):
                    nxt.add(subspace_from_rows(field, n, list(u.rows) + [vec]))
        level = nxt
    return sorted(level)
