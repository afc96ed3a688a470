"""Shared test utilities: random inputs and independent oracles.

The oracles here deliberately avoid the library's kernels and engines: set
arithmetic is done with plain Python sets so the production code is checked
against something it does not share.
"""

from __future__ import annotations

import random

import numpy as np

from kghier.grouping import GroupKey, GroupTable
from kghier.ingest import SymbolTable


def make_symbols(n_entities: int, n_predicates: int) -> SymbolTable:
    symbols = SymbolTable()
    for i in range(n_entities):
        symbols.intern_entity(f"e{i:04d}")
    for i in range(n_predicates):
        symbols.intern_predicate(f"r{i:02d}")
    return symbols


def table_from_sets(member_sets: dict[str, set[int]], alpha: int = 1,
                    n_entities: int | None = None) -> GroupTable:
    """GroupTable whose groups are the given name -> member-id sets."""
    if n_entities is None:
        n_entities = 1 + max((max(s) for s in member_sets.values() if s), default=0)
    symbols = make_symbols(n_entities, len(member_sets))
    groups = {}
    for idx, name in enumerate(sorted(member_sets)):
        members = np.array(sorted(member_sets[name]), dtype=np.int64)
        groups[GroupKey(idx, idx, name)] = members
    return GroupTable(groups, alpha, symbols)


def random_table(rng: random.Random, max_groups: int = 200,
                 max_entities: int = 2000) -> GroupTable:
    n_groups = rng.randint(2, max_groups)
    n_entities = rng.randint(2, max_entities)
    member_sets = {}
    for g in range(n_groups):
        size = rng.randint(1, max(1, min(n_entities, 40)))
        member_sets[f"g{g:03d}"] = set(rng.sample(range(n_entities), size))
    return table_from_sets(member_sets, n_entities=n_entities)


def random_triple_lines(rng: random.Random, n_triples: int,
                        n_entities: int = 800, n_predicates: int = 12,
                        n_objects: int = 60) -> list[str]:
    """Random tsv lines with enough repetition to form real groups."""
    lines = []
    for _ in range(n_triples):
        s = f"e{rng.randrange(n_entities)}"
        p = f"r{rng.randrange(n_predicates)}"
        o = f"o{rng.randrange(n_objects)}"
        lines.append(f"{s}\t{p}\t{o}")
    return lines


def nested_triple_lines(rng: random.Random, n_triples: int,
                        dropout: float = 0.05) -> list[str]:
    """Triples over a city -> country -> continent world, with dropout.

    Each entity gets a location chain plus a hobby, so the resulting groups
    genuinely nest and the hierarchy has containment edges to exercise.
    """
    continents = [f"continent{i}" for i in range(4)]
    countries = {f"country{i}": continents[i % 4] for i in range(16)}
    cities = {f"city{i}": f"country{i % 16}" for i in range(64)}
    city_names = sorted(cities)
    sports = [f"sport{i}" for i in range(30)]
    lines: list[str] = []
    entity = 0
    while len(lines) < n_triples:
        e = f"e{entity}"
        entity += 1
        city = rng.choice(city_names)
        country = cities[city]
        continent = countries[country]
        for obj in (city, country, continent):
            if rng.random() >= dropout:
                lines.append(f"{e}\tLiveIn\t{obj}")
        lines.append(f"{e}\tPlays\t{rng.choice(sports)}")
    return lines[:n_triples]


def oracle_pairwise(table: GroupTable) -> dict[tuple[str, str], tuple[int, float, float]]:
    """All overlapping pairs via plain Python set arithmetic."""
    items = [(k.display_name, set(m.tolist())) for k, m in table.groups.items()]
    out = {}
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            name1, set1 = items[i]
            name2, set2 = items[j]
            inter = len(set1 & set2)
            if inter == 0:
                continue
            jaccard = inter / len(set1 | set2)
            hpi = inter / min(len(set1), len(set2))
            out[(name1, name2)] = (inter, jaccard, hpi)
    return out


def matrix_as_dict(matrix, table) -> dict[tuple[str, str], tuple[int, float, float]]:
    out = {}
    for rec in matrix:
        pair = tuple(sorted((rec.g1.display_name, rec.g2.display_name)))
        assert pair not in out, f"duplicate record for {pair}"
        out[pair] = (rec.intersection, rec.jaccard, rec.hpi)
    return out


def oracle_strict_subsets(table: GroupTable) -> set[tuple[str, str]]:
    """(larger, smaller) display-name pairs where smaller is a strict subset."""
    items = [(k.display_name, frozenset(m.tolist())) for k, m in table.groups.items()]
    out = set()
    for name1, set1 in items:
        for name2, set2 in items:
            if name1 != name2 and set2 < set1:
                out.add((name1, name2))
    return out


def oracle_equal_sets(table: GroupTable) -> dict[frozenset, set[str]]:
    """Partition of group names by exact member-set equality."""
    buckets: dict[frozenset, set[str]] = {}
    for key, members in table.groups.items():
        buckets.setdefault(frozenset(members.tolist()), set()).add(key.display_name)
    return buckets


def bfs_descendants(n: int, edges) -> list[set[int]]:
    """Per-node reachability computed by plain BFS."""
    children: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        children[u].append(v)
    reach = []
    for start in range(n):
        seen: set[int] = set()
        todo = list(children[start])
        while todo:
            v = todo.pop()
            if v in seen:
                continue
            seen.add(v)
            todo.extend(children[v])
        reach.append(seen)
    return reach
