"""Turn triples into named entity groups, in parallel splits.

Every triple (s, p, o) becomes the assertion "s belongs to the group
anchored at (p, o)". The triple set is divided into contiguous chunks, each
chunk builds a partial table, the partial tables are merged by set union per
key, and groups smaller than ``alpha`` are dropped. The result is identical
for every chunk count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError
from .ingest import SymbolTable, TripleSet

DEFAULT_ALPHA = 10


@dataclass(frozen=True)
class GroupKey:
    """Identity of a group: the (predicate, object) id pair.

    The display name is cosmetic (predicate string + "_" + object string);
    equality and ordering use the id pair only. ``inverse`` marks groups from
    the optional object-side grouping, whose anchor pair is (predicate,
    subject); it participates in identity so the two directions cannot
    collide.
    """

    predicate: int
    object: int
    display_name: str = field(compare=False)
    inverse: bool = False

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (int(self.inverse), self.predicate, self.object)


class GroupTable:
    """Associative table from GroupKey to a sorted int64 array of members.

    Keys are stored in canonical (inverse, predicate, object) order, so plain
    iteration is deterministic everywhere downstream.
    """

    def __init__(self, groups: dict[GroupKey, np.ndarray], alpha: int,
                 symbols: SymbolTable | None = None):
        items = sorted(groups.items(), key=lambda kv: kv[0].sort_key)
        self.groups: dict[GroupKey, np.ndarray] = {
            key: np.asarray(members, dtype=np.int64) for key, members in items
        }
        self.alpha = alpha
        self.symbols = symbols

    def __len__(self) -> int:
        return len(self.groups)

    def __iter__(self):
        return iter(self.groups)

    def sorted_keys(self) -> list[GroupKey]:
        return list(self.groups)

    def members(self, key: GroupKey) -> np.ndarray:
        return self.groups[key]

    def sizes(self) -> np.ndarray:
        return np.array([m.size for m in self.groups.values()], dtype=np.int64)


def _group_chunk(chunk: np.ndarray, inverse: bool) -> dict[tuple, list[int]]:
    """Partial table for one contiguous chunk of triples."""
    partial: dict[tuple, list[int]] = {}
    for s, p, o in chunk.tolist():
        key = (False, p, o)
        members = partial.get(key)
        if members is None:
            partial[key] = [s]
        else:
            members.append(s)
        if inverse:
            key = (True, p, s)
            members = partial.get(key)
            if members is None:
                partial[key] = [o]
            else:
                members.append(o)
    return partial


def generate_groups(triples: TripleSet, alpha: int = DEFAULT_ALPHA,
                    jobs: int = 1, inverse: bool = False) -> GroupTable:
    """Build the group table: split, map, merge, filter by minimum size.

    The chunking is purely an execution detail: the merge is a set union per
    key, so any ``jobs`` value yields the same table.
    """
    if alpha < 1:
        raise ConfigError(f"alpha must be >= 1, got {alpha}")
    if jobs < 1:
        raise ConfigError(f"jobs must be >= 1, got {jobs}")

    chunks = np.array_split(triples.triples, jobs)
    if jobs == 1:
        partials = [_group_chunk(chunks[0], inverse)]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(lambda c: _group_chunk(c, inverse), chunks))

    merged: dict[tuple, list[int]] = {}
    for partial in partials:
        for key, members in partial.items():
            existing = merged.get(key)
            if existing is None:
                merged[key] = members
            else:
                existing.extend(members)

    symbols = triples.symbols
    groups: dict[GroupKey, np.ndarray] = {}
    for (inv, pred, anchor), members in merged.items():
        unique = np.unique(np.asarray(members, dtype=np.int64))
        if unique.size < alpha:
            continue
        if inv:
            name = f"{symbols.entity(anchor)}_{symbols.predicate(pred)}"
        else:
            name = f"{symbols.predicate(pred)}_{symbols.entity(anchor)}"
        groups[GroupKey(pred, anchor, name, inv)] = unique
    return GroupTable(groups, alpha, symbols)


def group_stats(table: GroupTable) -> dict:
    """Summary of a group table: count, size histogram, largest groups."""
    sizes = table.sizes()
    histogram: dict[str, int] = {}
    if sizes.size:
        exponents = np.floor(np.log2(sizes)).astype(int)
        for exp in sorted(set(exponents.tolist())):
            lo, hi = 2 ** exp, 2 ** (exp + 1) - 1
            label = str(lo) if lo == hi else f"{lo}-{hi}"
            histogram[label] = int((exponents == exp).sum())
    largest = sorted(
        ((key.display_name, int(members.size)) for key, members in table.groups.items()),
        key=lambda pair: (-pair[1], pair[0]),
    )[:10]
    return {
        "group_count": len(table),
        "histogram": histogram,
        "largest": largest,
    }
