"""Vectorized pairwise subspace-distance scans over GF(2).

Every codeword is packed into a fixed-width row block (padded with zero
rows, which do not change any rank).  For a pair (i, j),
dim(U_i + U_j) is the rank of the two blocks stacked, computed for a whole
chunk of pairs by :func:`gf2_rank_batch`.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Sequence

import numpy as np

from .gf_matrix import gf2_rank_batch
from .subspace_core import Subspace

CHUNK = 1 << 19


def _dtype_for(n: int):
    for dt in (np.uint8, np.uint16, np.uint32, np.uint64):
        if n <= np.iinfo(dt).bits:
            return dt
    raise ValueError(f"ambient dimension {n} is too large to pack")


def pack_subspaces(codewords: Sequence[Subspace], n: int) -> tuple[np.ndarray, np.ndarray]:
    """(blocks, dims): blocks[i] holds codeword i's packed generator rows."""
    width = max((c.dim for c in codewords), default=0)
    blocks = np.zeros((len(codewords), max(width, 1)), dtype=_dtype_for(n))
    for i, c in enumerate(codewords):
        rows = c.packed()
        blocks[i, : len(rows)] = rows
    dims = np.array([c.dim for c in codewords], dtype=np.int64)
    return blocks, dims


def pair_chunks(count: int, chunk: int = CHUNK) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """All pairs i < j of range(count), in row-major order, in chunks of about ``chunk``."""
    start = 0
    while start < count - 1:
        stop = start
        total = 0
        while stop < count - 1 and (total == 0 or total + count - 1 - stop <= chunk):
            total += count - 1 - stop
            stop += 1
        rows = np.arange(start, stop)
        lengths = count - 1 - rows
        i = np.repeat(rows, lengths)
        offsets = np.repeat(np.cumsum(lengths) - lengths, lengths)
        j = np.arange(total) - offsets + i + 1
        yield i, j
        start = stop


def sample_pairs(count: int, samples: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    i = rng.integers(0, count, size=samples)
    j = rng.integers(0, count - 1, size=samples)
    j = np.where(j >= i, j + 1, j)
    return np.minimum(i, j), np.maximum(i, j)


def pair_distances(blocks: np.ndarray, dims: np.ndarray, n: int, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    stacked = np.concatenate([blocks[i], blocks[j]], axis=1)
    return 2 * gf2_rank_batch(stacked, n) - dims[i] - dims[j]


def _chunk_min(args) -> int:
    blocks, dims, n, i, j = args
    return int(pair_distances(blocks, dims, n, i, j).min())


def min_pairwise_distance(
    blocks: np.ndarray, dims: np.ndarray, n: int, workers: int = 1, chunk: int = CHUNK
) -> int:
    count = len(blocks)
    if count < 2:
        raise ValueError("a minimum distance needs at least two codewords")
    jobs = ((blocks, dims, n, i, j) for i, j in pair_chunks(count, chunk))
    if workers <= 1:
        return min(_chunk_min(job) for job in jobs)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return min(pool.map(_chunk_min, jobs))
