"""Pairwise group similarities: Jaccard and hub promoted index (HPI).

Two engines produce the same matrix: an exhaustive scan over all group
combinations (the semantic reference) and an inverted-index engine that only
touches co-occurring pairs. Both are shared-nothing map-merge over contiguous
ranges, so the output is independent of the job count. Zero-intersection
pairs are omitted from the matrix; they carry no information downstream.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .grouping import GroupKey, GroupTable


@dataclass(frozen=True)
class SimilarityRecord:
    """Similarity of one unordered group pair, canonicalized g1 < g2."""

    g1: GroupKey
    g2: GroupKey
    intersection: int
    jaccard: float
    hpi: float


@dataclass(frozen=True)
class SimilarityMatrix:
    """All records with intersection > 0, in canonical (g1, g2) order."""

    records: tuple[SimilarityRecord, ...]
    group_count: int

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def _ratios(intersection: int, size1: int, size2: int) -> tuple[float, float]:
    # jaccard = |A n B| / |A u B|, hpi = |A n B| / min(|A|, |B|)
    jaccard = intersection / (size1 + size2 - intersection)
    hpi = intersection / (size1 if size1 < size2 else size2)
    return jaccard, hpi


def _as_member_array(members) -> np.ndarray:
    if isinstance(members, np.ndarray):
        arr = members.astype(np.int64, copy=False)
    else:
        arr = np.fromiter(members, dtype=np.int64)
    return np.unique(arr)


def pair_similarity(members1, members2) -> tuple[int, float, float]:
    """(intersection, jaccard, hpi) for two entity sets.

    Accepts any int iterables; duplicates are collapsed. Empty sets are a
    precondition violation.
    """
    a = _as_member_array(members1)
    b = _as_member_array(members2)
    if a.size == 0 or b.size == 0:
        raise ValueError("pair_similarity requires non-empty member sets")
    inter = int(kernels.intersection_size(a, b))
    jaccard, hpi = _ratios(inter, int(a.size), int(b.size))
    return inter, jaccard, hpi


def _pack(table: GroupTable) -> tuple[list[GroupKey], np.ndarray, np.ndarray, np.ndarray]:
    """Member sets packed back to back in canonical group order."""
    keys = table.sorted_keys()
    sizes = table.sizes()
    offsets = np.zeros(len(keys) + 1, dtype=np.int64)
    np.cumsum(sizes, out=offsets[1:])
    flat = (
        np.concatenate([table.groups[k] for k in keys])
        if keys else np.empty(0, dtype=np.int64)
    )
    return keys, np.ascontiguousarray(flat, dtype=np.int64), offsets, sizes


def _records_from_counts(keys, sizes, idx1, idx2, counts) -> tuple[SimilarityRecord, ...]:
    records = []
    for i, j, inter in zip(idx1.tolist(), idx2.tolist(), counts.tolist()):
        jaccard, hpi = _ratios(inter, int(sizes[i]), int(sizes[j]))
        records.append(SimilarityRecord(keys[i], keys[j], inter, jaccard, hpi))
    return tuple(records)


def _chunk_bounds(n: int, jobs: int) -> list[tuple[int, int]]:
    cuts = np.linspace(0, n, num=jobs + 1, dtype=np.int64)
    return [(int(cuts[k]), int(cuts[k + 1])) for k in range(jobs)]


def all_pairs_bruteforce(table: GroupTable, jobs: int = 1) -> SimilarityMatrix:
    """Evaluate every unordered group pair and keep the overlapping ones.

    Pairs are enumerated in lexicographic (i, j) order and chunked
    contiguously across jobs; the merge is plain concatenation, so the result
    is already in canonical order.
    """
    keys, flat, offsets, sizes = _pack(table)
    n = len(keys)
    if n < 2:
        return SimilarityMatrix(records=(), group_count=n)
    left, right = np.triu_indices(n, k=1)
    left = np.ascontiguousarray(left, dtype=np.int64)
    right = np.ascontiguousarray(right, dtype=np.int64)

    bounds = _chunk_bounds(left.shape[0], jobs)

    def run(b):
        lo, hi = b
        return kernels.pair_intersections(flat, offsets, left[lo:hi], right[lo:hi])

    if jobs == 1:
        parts = [run(bounds[0])]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(run, bounds))
    counts = np.concatenate(parts)
    mask = counts > 0
    records = _records_from_counts(keys, sizes, left[mask], right[mask], counts[mask])
    return SimilarityMatrix(records=records, group_count=n)


def all_pairs_indexed(table: GroupTable, jobs: int = 1) -> SimilarityMatrix:
    """Inverted-index engine; record-for-record equal to the exhaustive scan.

    An index entity -> containing groups is built once, each job emits
    co-occurrence events for a contiguous entity range, and the events are
    aggregated into per-pair intersection counts.
    """
    keys, flat, offsets, sizes = _pack(table)
    n = len(keys)
    if n < 2:
        return SimilarityMatrix(records=(), group_count=n)

    # Invert: for every entity, the ascending list of groups containing it.
    group_of_event = np.repeat(np.arange(n, dtype=np.int64), sizes)
    entity_of_event = flat
    order = np.argsort(entity_of_event, kind="stable")  # stable keeps groups ascending
    post_flat = np.ascontiguousarray(group_of_event[order])
    n_entities = int(entity_of_event.max()) + 1 if entity_of_event.size else 0
    tallies = np.bincount(entity_of_event, minlength=n_entities)
    post_offsets = np.zeros(n_entities + 1, dtype=np.int64)
    np.cumsum(tallies, out=post_offsets[1:])

    bounds = _chunk_bounds(n_entities, jobs)

    def run(b):
        lo, hi = b
        return kernels.emit_pair_keys(post_flat, post_offsets, lo, hi, n)

    if jobs == 1:
        parts = [run(bounds[0])]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(run, bounds))
    events = np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
    pair_keys, counts = np.unique(events, return_counts=True)
    idx1 = pair_keys // n
    idx2 = pair_keys % n
    records = _records_from_counts(keys, sizes, idx1, idx2, counts.astype(np.int64))
    return SimilarityMatrix(records=records, group_count=n)


ENGINES = {
    "indexed": all_pairs_indexed,
    "bruteforce": all_pairs_bruteforce,
}
