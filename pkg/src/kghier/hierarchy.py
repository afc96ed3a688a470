"""Containment hierarchy over entity groups.

Construction runs in four passes over the similarity matrix:

1. equivalence: pairs that are near-equal (jaccard >= theta, or equal sizes
   with hpi >= theta) are merged into one node via union-find;
2. containment: every record with hpi >= theta whose nodes have different
   member counts contributes a larger -> smaller edge;
3. transitive reduction removes edges implied by longer paths;
4. roots are the nodes without an incoming edge.

Edges always point from a strictly larger member count to a strictly smaller
one, so the graph is acyclic by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError, IntegrityError
from .grouping import GroupKey, GroupTable
from .similarity import SimilarityMatrix

DEFAULT_THETA = 0.9


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra > rb:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class HierarchyNode:
    """One equivalence class of near-equal groups."""

    representative: GroupKey
    aliases: tuple[GroupKey, ...]
    member_count: int


@dataclass(frozen=True)
class HierarchyDag:
    """Nodes plus directed containment edges (parent contains child).

    ``edges`` and ``roots`` hold indices into ``nodes``; both are sorted.
    """

    nodes: tuple[HierarchyNode, ...]
    edges: tuple[tuple[int, int], ...]
    roots: tuple[int, ...]
    theta: float

    def node_names(self) -> list[str]:
        return [n.representative.display_name for n in self.nodes]


def equivalence_classes(table: GroupTable, matrix: SimilarityMatrix,
                        theta: float) -> list[list[GroupKey]]:
    """Partition the groups into near-equal classes (pass 1).

    Classes are returned in canonical order (by their smallest member key)
    with canonically ordered members.
    """
    keys = table.sorted_keys()
    index = {key: i for i, key in enumerate(keys)}
    uf = _UnionFind(len(keys))
    # Threshold comparisons are plain >= on doubles, no epsilon: ratios come
    # from exact integer counts, and the one exactness-critical case,
    # hpi == 1.0, holds iff intersection == min size (x/x is exact in IEEE).
    for rec in matrix:
        i = index.get(rec.g1)
        j = index.get(rec.g2)
        if i is None or j is None:
            raise IntegrityError(
                f"similarity record references unknown group "
                f"{(rec.g1 if i is None else rec.g2).display_name!r}"
            )
        if rec.jaccard >= theta:
            uf.union(i, j)
        elif rec.hpi >= theta and table.groups[rec.g1].size == table.groups[rec.g2].size:
            uf.union(i, j)
    classes: dict[int, list[GroupKey]] = {}
    for i, key in enumerate(keys):
        classes.setdefault(uf.find(i), []).append(key)
    return [classes[root] for root in sorted(classes)]


def raw_containment_edges(table: GroupTable, matrix: SimilarityMatrix, theta: float,
                          nodes: tuple[HierarchyNode, ...]) -> set[tuple[int, int]]:
    """Pre-reduction edge set (pass 2): larger node -> smaller node."""
    node_of_key: dict[GroupKey, int] = {}
    for idx, node in enumerate(nodes):
        for alias in node.aliases:
            node_of_key[alias] = idx
    edges: set[tuple[int, int]] = set()
    for rec in matrix:
        if rec.hpi < theta:
            continue
        a = node_of_key[rec.g1]
        b = node_of_key[rec.g2]
        if a == b:
            continue
        ca, cb = nodes[a].member_count, nodes[b].member_count
        if ca > cb:
            edges.add((a, b))
        elif cb > ca:
            edges.add((b, a))
        # equal node counts: no direction, no edge
    return edges


def transitive_reduction(n: int, edges, order) -> list[tuple[int, int]]:
    """Drop every edge implied by a longer path; reachability is preserved.

    ``order`` must be a topological order of the node indices. Reachability
    is tracked as per-node bitmasks.
    """
    children: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        children[u].append(v)
    reach = [0] * n  # bitmask of nodes reachable through >= 1 edge
    for u in reversed(order):
        r = 0
        for v in children[u]:
            r |= (1 << v) | reach[v]
        reach[u] = r
    kept: list[tuple[int, int]] = []
    for u in range(n):
        cs = sorted(children[u])
        m = len(cs)
        # prefix/suffix ORs so each child is checked against all the others
        prefix = [0] * (m + 1)
        for i, w in enumerate(cs):
            prefix[i + 1] = prefix[i] | reach[w]
        suffix = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            suffix[i] = suffix[i + 1] | reach[cs[i]]
        for i, v in enumerate(cs):
            if not ((prefix[i] | suffix[i + 1]) >> v) & 1:
                kept.append((u, v))
    return sorted(kept)


def build_hierarchy(table: GroupTable, matrix: SimilarityMatrix,
                    theta: float = DEFAULT_THETA) -> HierarchyDag:
    """Equivalence, containment, reduction, roots; deterministic throughout."""
    if not (0 < theta <= 1):
        raise ConfigError(f"theta must be in (0, 1], got {theta}")

    classes = equivalence_classes(table, matrix, theta)

    def representative(members: list[GroupKey]) -> GroupKey:
        return min(members, key=lambda k: (k.display_name, k.sort_key))

    nodes = tuple(
        sorted(
            (
                HierarchyNode(
                    representative=rep,
                    aliases=tuple(sorted(members, key=lambda k: k.sort_key)),
                    member_count=int(table.groups[rep].size),
                )
                for members in classes
                for rep in [representative(members)]
            ),
            key=lambda node: (node.representative.display_name, node.representative.sort_key),
        )
    )

    raw_edges = raw_containment_edges(table, matrix, theta, nodes)
    # Member counts strictly decrease along edges, so sorting by descending
    # count is a topological order.
    topo = sorted(range(len(nodes)), key=lambda i: (-nodes[i].member_count, i))
    edges = tuple(transitive_reduction(len(nodes), raw_edges, topo))
    has_parent = {child for _, child in edges}
    roots = tuple(i for i in range(len(nodes)) if i not in has_parent)
    return HierarchyDag(nodes=nodes, edges=edges, roots=roots, theta=theta)


def forest_view(dag: HierarchyDag) -> dict[int, int | None]:
    """Tree projection: each node keeps its most specific parent.

    Among multiple parents the one with the smallest member count wins, ties
    broken by lexicographic display name; ``None`` marks the synthetic root
    that adopts all DAG roots. The node set is unchanged.
    """
    parents: dict[int, list[int]] = {}
    for u, v in dag.edges:
        parents.setdefault(v, []).append(u)
    chosen: dict[int, int | None] = {}
    for i in range(len(dag.nodes)):
        options = parents.get(i)
        if not options:
            chosen[i] = None
        else:
            chosen[i] = min(
                options,
                key=lambda u: (
                    dag.nodes[u].member_count,
                    dag.nodes[u].representative.display_name,
                    u,
                ),
            )
    return chosen


def dag_stats(dag: HierarchyDag) -> dict:
    """Counts plus the maximum depth measured on the forest view."""
    parent = forest_view(dag)
    depth: dict[int, int] = {}
    for i in range(len(dag.nodes)):
        chain = []
        node: int | None = i
        while node is not None and node not in depth:
            chain.append(node)
            node = parent[node]
        d = 0 if node is None else depth[node]
        for n in reversed(chain):
            d += 1
            depth[n] = d
    max_depth = max(depth.values(), default=0)
    alias_total = sum(len(n.aliases) for n in dag.nodes)
    merged = sum(1 for n in dag.nodes if len(n.aliases) > 1)
    return {
        "nodes": len(dag.nodes),
        "edges": len(dag.edges),
        "roots": len(dag.roots),
        "max_depth": max_depth,
        "aliases": alias_total,
        "merged_nodes": merged,
    }
