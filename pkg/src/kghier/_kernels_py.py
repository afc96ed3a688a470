"""Pure-Python reference kernels for the similarity hot loops.

Same contracts as the compiled versions in ``_kernels.pyx``; selected by
``kghier.kernels`` when the extension is unavailable (or forced via
``KGHIER_BACKEND=python``). Kernels return integer counts only; ratio
derivation lives in the caller so both backends produce bit-identical
results.
"""

from __future__ import annotations

import numpy as np


def intersection_size(a: np.ndarray, b: np.ndarray) -> int:
    """Number of common elements of two sorted, duplicate-free int64 arrays."""
    return int(np.intersect1d(a, b, assume_unique=True).size)


def pair_intersections(flat: np.ndarray, offsets: np.ndarray,
                       left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Intersection sizes for the pairs (left[k], right[k]).

    ``flat``/``offsets`` hold all member sets packed back to back; set ``i``
    spans ``flat[offsets[i]:offsets[i + 1]]`` and is sorted.
    """
    out = np.empty(left.shape[0], dtype=np.int64)
    for k in range(left.shape[0]):
        i = int(left[k])
        j = int(right[k])
        out[k] = np.intersect1d(
            flat[offsets[i]:offsets[i + 1]],
            flat[offsets[j]:offsets[j + 1]],
            assume_unique=True,
        ).size
    return out


def emit_pair_keys(post_flat: np.ndarray, post_offsets: np.ndarray,
                   e_start: int, e_end: int, n_groups: int) -> np.ndarray:
    """Co-occurring group pairs for every entity in [e_start, e_end).

    ``post_flat``/``post_offsets`` is the inverted index: the ascending group
    ids containing entity ``e`` span ``post_flat[post_offsets[e]:
    post_offsets[e + 1]]``. Every unordered pair (g, h) with g < h sharing an
    entity is emitted once per shared entity, encoded as ``g * n_groups + h``.
    """
    out: list[int] = []
    offsets = post_offsets.tolist()
    flat = post_flat.tolist()
    g = int(n_groups)
    for e in range(e_start, e_end):
        lo, hi = offsets[e], offsets[e + 1]
        if hi - lo < 2:
            continue
        groups = flat[lo:hi]
        for i in range(len(groups) - 1):
            base = groups[i] * g
            for h in groups[i + 1:]:
                out.append(base + h)
    return np.asarray(out, dtype=np.int64)
