"""The multilevel construction of constant-dimension codes.

A constant-weight skeleton code of minimum Hamming distance 2*delta picks
the identifying vectors; each vector v contributes the lifts EF(v[c]) of
every codeword c of a rank-distance-delta Ferrers code on v's diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import pairscan
from .ferrers_forms import as_binary_vector, diagram_of, filling_of, lift, vector_str
from .finite_field import Field
from .gf_matrix import gf2_rank_batch
from .rank_metric import ferrers_code, rank_distance
from .subspace_core import Subspace, identifying_vector, subspace_distance


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a != b for a, b in zip(u, v))


@dataclass(frozen=True)
class SkeletonCode:
    n: int
    k: int
    distance: int
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.n or sum(v) != self.k:
                raise ValueError(f"{vector_str(v)} is not a length-{self.n} weight-{self.k} vector")
        for a, b in combinations(self.vectors, 2):
            if hamming_distance(a, b) < self.distance:
                raise ValueError(
                    f"{vector_str(a)} and {vector_str(b)} are at Hamming distance "
                    f"{hamming_distance(a, b)} < {self.distance}"
                )

    def __len__(self) -> int:
        return len(self.vectors)

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int] | str], distance: int | None = None) -> SkeletonCode:
        vectors = tuple(as_binary_vector(v) for v in vectors)
        if not vectors:
            raise ValueError("empty skeleton")
        if distance is None:
            pairs = [hamming_distance(a, b) for a, b in combinations(vectors, 2)]
            distance = min(pairs) if pairs else 2 * sum(vectors[0])
        return cls(len(vectors[0]), sum(vectors[0]), distance, vectors)


def lexicode_skeleton(n: int, k: int, d: int) -> SkeletonCode:
    """Greedy constant-weight code: scan weight-k vectors from 1^k 0^(n-k) downwards."""
    if d < 2 or d % 2:
        raise ValueError(f"minimum distance must be even and >= 2, got {d}")
    if not 0 < k <= n:
        raise ValueError(f"need 0 < k <= n, got k={k}, n={n}")
    kept: list[tuple[int, ...]] = []
    # combinations() of positions in increasing order yields descending vectors
    for support in combinations(range(n), k):
        v = tuple(int(j in support) for j in range(n))
        if all(hamming_distance(v, u) >= d for u in kept):
            kept.append(v)
    return SkeletonCode(n, k, d, tuple(kept))


@dataclass(frozen=True)
class Fiber:
    v: tuple[int, ...]
    dimension: int
    bound: int
    attains_bound: bool
    size: int


@dataclass
class SubspaceCode:
    """A set of subspaces of F_q^n with its claimed minimum distance.

    ``skeleton`` and ``fibers`` are provenance from the multilevel
    construction; ``notes`` carries any other provenance as key=value pairs.
    """

    field: Field
    n: int
    codewords: list[Subspace]
    distance: int | None = None
    skeleton: tuple[tuple[int, ...], ...] | None = None
    fibers: tuple[Fiber, ...] = ()
    notes: dict[str, str] = dc_field(default_factory=dict)

    def __post_init__(self):
        seen = set()
        for c in self.codewords:
            if c.n != self.n:
                raise ValueError(f"codeword in F^{c.n} inside a code in F^{self.n}")
            if c.field != self.field:
                raise TypeError(f"codeword over {c.field} inside a code over {self.field}")
            key = c.key()
            if key in seen:
                raise ValueError(f"duplicate codeword {c!r}")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.codewords)

    @property
    def dimension_profile(self) -> list[int]:
        return sorted({c.dim for c in self.codewords})

    @property
    def k(self) -> int | None:
        """The common dimension, or None for a mixed-dimension code."""
        profile = self.dimension_profile
        return profile[0] if len(profile) == 1 else None

    def deficits(self) -> list[Fiber]:
        return [f for f in self.fibers if not f.attains_bound]


def dedup(codewords: Iterable[Subspace]) -> tuple[list[Subspace], int]:
    """Drop repeated subspaces, keeping first occurrences; returns (unique, removed)."""
    seen = set()
    out = []
    removed = 0
    for c in codewords:
        if c.key() in seen:
            removed += 1
            continue
        seen.add(c.key())
        out.append(c)
    return out, removed


def construct_code(
    field: Field, n: int, k: int, delta: int, skeleton: SkeletonCode | str = "default"
) -> SubspaceCode:
    """Union over skeleton vectors v of {EF(v[c]) : c in C_v}.

    Codewords appear in skeleton order, and within a fiber in the
    lexicographic order of the rank-metric code's coefficient vectors.
    """
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    if skeleton == "default":
        skeleton = lexicode_skeleton(n, k, 2 * delta)
    if skeleton.n != n or skeleton.k != k:
        raise ValueError(f"skeleton has length {skeleton.n} and weight {skeleton.k}, expected {n} and {k}")
    if skeleton.distance < 2 * delta:
        raise ValueError(f"skeleton distance {skeleton.distance} is below 2*delta = {2 * delta}")
    codewords: list[Subspace] = []
    fibers = []
    for v in skeleton.vectors:
        rm = ferrers_code(diagram_of(v), delta, field)
        for c in rm.codewords():
            codewords.append(lift(v, c))
        fibers.append(Fiber(v, rm.dimension, rm.bound, rm.attains_bound, rm.size))
    unique, removed = dedup(codewords)
    if removed:
        raise AssertionError(f"lifting produced {removed} repeated subspaces")
    return SubspaceCode(field, n, unique, 2 * delta, skeleton.vectors, tuple(fibers))


@dataclass
class Lemma1Report:
    pairs_checked: int = 0
    cross_pairs: int = 0
    same_pairs: int = 0
    violations: list[tuple[int, int, str]] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_lemma1(code: SubspaceCode, samples: int | None = None, seed: int = 0) -> Lemma1Report:
    """Check d_S >= d_H across fibers and d_S = 2 d_R within a fiber.

    Scans all pairs unless ``samples`` is given.  Codewords whose identifying
    vector is not in the code's skeleton count as violations.
    """
    report = Lemma1Report()
    if code.skeleton is not None:
        allowed = set(code.skeleton)
        for idx, c in enumerate(code.codewords):
            if identifying_vector(c) not in allowed:
                report.violations.append((idx, idx, "identifying vector outside the skeleton"))
    count = len(code)
    if count < 2:
        return report
    if code.field.q == 2:
        _lemma1_gf2(code, report, samples, seed)
    else:
        _lemma1_generic(code, report, samples, seed)
    return report


def _lemma1_gf2(code: SubspaceCode, report: Lemma1Report, samples: int | None, seed: int) -> None:
    n = code.n
    blocks, dims = pairscan.pack_subspaces(code.codewords, n)
    ident = np.array([int(vector_str(identifying_vector(c)), 2) for c in code.codewords], dtype=np.int64)
    if samples is None:
        chunks = pairscan.pair_chunks(len(code))
    else:
        chunks = [pairscan.sample_pairs(len(code), samples, seed)]
    for i, j in chunks:
        d_s = pairscan.pair_distances(blocks, dims, n, i, j)
        d_h = np.array([bin(x).count("1") for x in (ident[i] ^ ident[j]).tolist()], dtype=np.int64)
        same = d_h == 0
        # within a fiber the pivot columns cancel, so the generator difference
        # has the same rank as the difference of the two fillings
        d_r = gf2_rank_batch(blocks[i[same]] ^ blocks[j[same]], n)
        bad_cross = np.flatnonzero(~same & (d_s < d_h))
        bad_same = np.flatnonzero(same)[d_s[same] != 2 * d_r]
        for b in bad_cross[:20]:
            report.violations.append((int(i[b]), int(j[b]), f"d_S={d_s[b]} < d_H={d_h[b]}"))
        for b in bad_same[:20]:
            report.violations.append((int(i[b]), int(j[b]), f"d_S={d_s[b]} != 2*d_R"))
        report.pairs_checked += len(i)
        report.same_pairs += int(same.sum())
        report.cross_pairs += int((~same).sum())


def _lemma1_generic(code: SubspaceCode, report: Lemma1Report, samples: int | None, seed: int) -> None:
    count = len(code)
    if samples is None:
        pairs = combinations(range(count), 2)
    else:
        i, j = pairscan.sample_pairs(count, samples, seed)
        pairs = zip(i.tolist(), j.tolist())
    for a, b in pairs:
        u, w = code.codewords[a], code.codewords[b]
        d_s = subspace_distance(u, w)
        d_h = hamming_distance(identifying_vector(u), identifying_vector(w))
        report.pairs_checked += 1
        if d_h:
            report.cross_pairs += 1
            if d_s < d_h:
                report.violations.append((a, b, f"d_S={d_s} < d_H={d_h}"))
        else:
            report.same_pairs += 1
            d_r = rank_distance(filling_of(u), filling_of(w))
            if d_s != 2 * d_r:
                report.violations.append((a, b, f"d_S={d_s} != 2*d_R={2 * d_r}"))

