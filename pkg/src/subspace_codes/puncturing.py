"""Puncturing a constant-dimension code into a mixed-dimension code one dimension down.

Given a hyperplane Q of F_q^n and a vector v outside it, the punctured code
keeps every codeword contained in Q and, for every codeword containing v,
its intersection with Q.  Both kinds are carried into F_q^(n-1) through a
fixed isomorphism Q -> F_q^(n-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import pairscan
from .finite_field import Field
from .gf_matrix import GFMatrix
from .multilevel import SubspaceCode, dedup
from .subspace_core import Subspace, identifying_vector, intersect, subspace_distance, subspace_from_rows

PAIR_GUARD = 10**8


class Hyperplane:
    """An (n-1)-dimensional subspace Q with coordinates Q -> F_q^(n-1).

    The coordinates of x in Q are its coefficients in Q's RREF basis, which
    are just x's entries at the pivot columns.  For the hyperplane
    {x : x_j = 0} that amounts to deleting coordinate j.
    """

    def __init__(self, subspace: Subspace):
        if subspace.dim != subspace.n - 1:
            raise ValueError(f"a hyperplane of F^{subspace.n} has dimension {subspace.n - 1}, got {subspace.dim}")
        self.subspace = subspace
        self.field: Field = subspace.field
        self.n = subspace.n

    def contains(self, vector: Sequence[int]) -> bool:
        return self.subspace.contains(vector)

    def contains_subspace(self, u: Subspace) -> bool:
        return self.subspace.contains_subspace(u)

    def to_coordinates(self, vector: Sequence[int]) -> tuple[int, ...]:
        if not self.contains(vector):
            raise ValueError("vector does not lie in the hyperplane")
        return tuple(vector[p] for p in self.subspace.pivots)

    def from_coordinates(self, coords: Sequence[int]) -> tuple[int, ...]:
        f = self.field
        out = [0] * self.n
        for c, row in zip(coords, self.subspace.rows):
            if c:
                out = [f.add(x, f.mul(c, y)) for x, y in zip(out, row)]
        return tuple(out)

    def image(self, u: Subspace) -> Subspace:
        """U (a subspace of Q) as a subspace of F_q^(n-1)."""
        return subspace_from_rows(self.field, self.n - 1, [self.to_coordinates(r) for r in u.rows])


def coordinate_hyperplane(field: Field, n: int, dropped: int) -> Hyperplane:
    """{x in F_q^n : x_dropped = 0}; ``dropped`` is 1-based."""
    if not 1 <= dropped <= n:
        raise ValueError(f"coordinate {dropped} is outside 1..{n}")
    rows = [[int(j == i) for j in range(n)] for i in range(n) if i != dropped - 1]
    pivots = [i for i in range(n) if i != dropped - 1]
    return Hyperplane(Subspace(GFMatrix(field, rows, n), pivots, trusted=True))


def puncture(code: SubspaceCode, q_plane: Hyperplane, v: Sequence[int]) -> SubspaceCode:
    """Codewords inside Q, plus c n Q for codewords c containing v, mapped into F_q^(n-1)."""
    v = tuple(v)
    if q_plane.n != code.n or len(v) != code.n:
        raise ValueError("hyperplane, vector and code must share the ambient dimension")
    if q_plane.contains(v):
        raise ValueError("the puncturing vector must lie outside the hyperplane")
    k = code.k
    if k is None:
        raise ValueError("puncturing needs a constant-dimension code")
    inside: list[Subspace] = []
    through_v: list[Subspace] = []
    for c in code.codewords:
        if q_plane.contains_subspace(c):
            inside.append(q_plane.image(c))
        elif c.contains(v):
            meet = intersect(c, q_plane.subspace)
            if meet.dim != k - 1:
                raise AssertionError(f"c n Q has dimension {meet.dim}, expected {k - 1}")
            through_v.append(q_plane.image(meet))
    merged, overlap = dedup(inside + through_v)
    notes = dict(code.notes)
    notes.update(
        {
            "punctured_from_size": str(len(code)),
            "inside_hyperplane": str(len(inside)),
            "through_vector": str(len(through_v)),
            "overlap": str(overlap),
            "v": "".join(str(x) for x in v),
        }
    )
    distance = code.distance - 1 if code.distance is not None else None
    return SubspaceCode(code.field, code.n - 1, merged, distance, notes=notes)


def fiber_contributions(code: SubspaceCode, q_plane: Hyperplane, v: Sequence[int]) -> dict[str, tuple[int, int]]:
    """Per identifying vector of the source code: (codewords inside Q, codewords through v)."""
    out: dict[str, tuple[int, int]] = {}
    for c in code.codewords:
        key = "".join(str(x) for x in identifying_vector(c))
        inside, through = out.get(key, (0, 0))
        if q_plane.contains_subspace(c):
            inside += 1
        elif c.contains(v):
            through += 1
        out[key] = (inside, through)
    return out


@dataclass(frozen=True)
class DistanceReport:
    minimum: int
    expect: int | None
    pairs: int
    exhaustive: bool

    @property
    def passed(self) -> bool:
        return self.expect is None or self.minimum >= self.expect

    @property
    def exact(self) -> bool:
        return self.expect is not None and self.minimum == self.expect


def verify_min_distance(
    code: SubspaceCode,
    expect: int | None = None,
    *,
    samples: int | None = None,
    seed: int = 0,
    workers: int = 1,
) -> DistanceReport:
    """Minimum pairwise subspace distance, exhaustive unless ``samples`` is given.

    A sampled minimum only bounds the true minimum from above.
    """
    count = len(code)
    if count < 2:
        raise ValueError("a minimum distance needs at least two codewords")
    total = count * (count - 1) // 2
    if samples is None and total > PAIR_GUARD:
        raise ValueError(f"{total} pairs exceed the exhaustive-scan guard {PAIR_GUARD}")
    if code.field.q == 2:
        blocks, dims = pairscan.pack_subspaces(code.codewords, code.n)
        if samples is None:
            minimum = pairscan.min_pairwise_distance(blocks, dims, code.n, workers=workers)
        else:
            i, j = pairscan.sample_pairs(count, samples, seed)
            minimum = int(pairscan.pair_distances(blocks, dims, code.n, i, j).min())
    else:
        if samples is None:
            pairs = combinations(range(count), 2)
        else:
            i, j = pairscan.sample_pairs(count, samples, seed)
            pairs = zip(i.tolist(), j.tolist())
        minimum = min(subspace_distance(code.codewords[a], code.codewords[b]) for a, b in pairs)
    return DistanceReport(minimum, expect, total if samples is None else samples, samples is None)
