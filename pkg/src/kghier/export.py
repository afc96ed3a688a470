"""Serialize group tables, similarity matrices and hierarchies.

All exporters are deterministic: identical inputs produce byte-identical
files. Group display names are made unique at export time (collisions get
``#2``, ``#3`` suffixes in id order; ``ALL`` is reserved for the synthetic
tree root).
"""

from __future__ import annotations

import json
import shutil
from pathlib import Path

import numpy as np

from . import __version__
from .errors import DocumentError, KghierError
from .grouping import GroupKey, GroupTable
from .hierarchy import HierarchyDag, forest_view
from .ingest import SymbolTable
from .similarity import SimilarityMatrix, SimilarityRecord

DEFAULT_SAMPLE_SIZE = 25
SYNTHETIC_ROOT = "ALL"

DOCUMENT_KEYS = ("metadata", "nodes", "tree", "dag_edges")
METADATA_KEYS = ("dataset", "alpha", "theta", "tool_version",
                 "group_count", "node_count", "edge_count", "root_count")
NODE_KEYS = ("name", "aliases", "member_count", "members")


def export_names(keys) -> dict[GroupKey, str]:
    """Unique export name per group key.

    First-come (in id order) keeps the bare display name; later collisions
    get ``#2``, ``#3``, ... The synthetic root name is treated as taken.
    """
    assigned = {SYNTHETIC_ROOT}
    names: dict[GroupKey, str] = {}
    for key in sorted(keys, key=lambda k: k.sort_key):
        candidate = key.display_name
        n = 1
        while candidate in assigned:
            n += 1
            candidate = f"{key.display_name}#{n}"
        assigned.add(candidate)
        names[key] = candidate
    return names


def _entity_strings(symbols: SymbolTable | None, members: np.ndarray) -> list[str]:
    if symbols is None:
        return [str(int(e)) for e in members]
    return sorted(symbols.entity(int(e)) for e in members)


def build_document(dag: HierarchyDag, table: GroupTable, *, dataset: str,
                   theta: float, alpha: int | None = None,
                   sample_size: int = DEFAULT_SAMPLE_SIZE,
                   full_members: bool = False) -> dict:
    """Assemble the hierarchy document (plain dict, fixed key order)."""
    names = export_names(table.sorted_keys())
    nodes_out = []
    for node in dag.nodes:
        members = _entity_strings(table.symbols, table.groups[node.representative])
        if not full_members:
            members = members[:sample_size]
        nodes_out.append({
            "name": names[node.representative],
            "aliases": sorted(names[a] for a in node.aliases),
            "member_count": node.member_count,
            "members": members,
        })
    order = sorted(range(len(nodes_out)), key=lambda i: nodes_out[i]["name"])
    rank = {i: r for r, i in enumerate(order)}
    nodes_out = [nodes_out[i] for i in order]

    parent = forest_view(dag)
    children: dict[int | None, list[int]] = {}
    for child, par in parent.items():
        children.setdefault(par, []).append(child)

    def subtree(i: int) -> dict:
        kids = sorted(children.get(i, []), key=lambda c: nodes_out[rank[c]]["name"])
        out = {"name": nodes_out[rank[i]]["name"]}
        out["children"] = [subtree(c) for c in kids]
        return out

    top = sorted(children.get(None, []), key=lambda c: nodes_out[rank[c]]["name"])
    tree = {"name": SYNTHETIC_ROOT, "children": [subtree(c) for c in top]}

    edge_names = sorted(
        (nodes_out[rank[u]]["name"], nodes_out[rank[v]]["name"]) for u, v in dag.edges
    )
    return {
        "metadata": {
            "dataset": dataset,
            "alpha": int(alpha) if alpha is not None else table.alpha,
            "theta": theta,
            "tool_version": __version__,
            "group_count": len(table),
            "node_count": len(dag.nodes),
            "edge_count": len(dag.edges),
            "root_count": len(dag.roots),
        },
        "nodes": nodes_out,
        "tree": tree,
        "dag_edges": [list(e) for e in edge_names],
    }


def write_document(document: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(document, fh, ensure_ascii=False, indent=2)
        fh.write("\n")


def export_json(dag: HierarchyDag, table: GroupTable, path, *, dataset: str,
                theta: float, alpha: int | None = None,
                sample_size: int = DEFAULT_SAMPLE_SIZE,
                full_members: bool = False) -> dict:
    """Write the hierarchy document as UTF-8 JSON; returns the document."""
    document = build_document(
        dag, table, dataset=dataset, theta=theta, alpha=alpha,
        sample_size=sample_size, full_members=full_members,
    )
    write_document(document, path)
    return document


def load_document(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def validate_document(document) -> list[str]:
    """Schema check; returns a list of violations (empty when valid).

    The schema: a document is an object with keys ``metadata`` (object with
    the METADATA_KEYS fields), ``nodes`` (array of objects with the NODE_KEYS
    fields, unique names), ``tree`` (nested ``{name, children}`` objects
    rooted at the synthetic root) and ``dag_edges`` (array of [parent, child]
    name pairs). Every tree and edge name below the root must resolve to a
    node entry.
    """
    problems: list[str] = []
    if not isinstance(document, dict):
        return ["document: not an object"]
    for key in DOCUMENT_KEYS:
        if key not in document:
            problems.append(f"{key}: missing")
    if problems:
        return problems

    meta = document["metadata"]
    if not isinstance(meta, dict):
        problems.append("metadata: not an object")
    else:
        for key in METADATA_KEYS:
            if key not in meta:
                problems.append(f"metadata.{key}: missing")

    names: set[str] = set()
    nodes = document["nodes"]
    if not isinstance(nodes, list):
        problems.append("nodes: not an array")
        nodes = []
    for idx, node in enumerate(nodes):
        if not isinstance(node, dict):
            problems.append(f"nodes[{idx}]: not an object")
            continue
        for key in NODE_KEYS:
            if key not in node:
                problems.append(f"nodes[{idx}].{key}: missing")
        name = node.get("name")
        if isinstance(name, str):
            if name in names:
                problems.append(f"nodes[{idx}].name: duplicate {name!r}")
            names.add(name)
        count = node.get("member_count")
        if not isinstance(count, int) or count < 0:
            problems.append(f"nodes[{idx}].member_count: not a non-negative integer")

    tree = document["tree"]
    if not isinstance(tree, dict) or tree.get("name") != SYNTHETIC_ROOT:
        problems.append(f"tree.name: root must be {SYNTHETIC_ROOT!r}")
    else:
        stack = [(child, "tree") for child in tree.get("children", [])]
        while stack:
            node, where = stack.pop()
            if not isinstance(node, dict) or "name" not in node:
                problems.append(f"{where}.children: entry without a name")
                continue
            name = node["name"]
            if name not in names:
                problems.append(f"{where}.children: dangling reference {name!r}")
            stack.extend((c, f"{where}.{name}") for c in node.get("children", []))

    edges = document["dag_edges"]
    if not isinstance(edges, list):
        problems.append("dag_edges: not an array")
        edges = []
    for idx, edge in enumerate(edges):
        if not (isinstance(edge, list) and len(edge) == 2):
            problems.append(f"dag_edges[{idx}]: not a [parent, child] pair")
            continue
        for name in edge:
            if name not in names:
                problems.append(f"dag_edges[{idx}]: dangling reference {name!r}")
    return problems


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(dag: HierarchyDag, table: GroupTable, path) -> None:
    """Directed-graph text form of the raw DAG (no synthetic root)."""
    names = export_names(table.sorted_keys())
    lines = ["digraph hierarchy {"]
    labeled = sorted(
        (names[n.representative], n.member_count) for n in dag.nodes
    )
    for name, count in labeled:
        lines.append(f"  {_dot_quote(name)} [label={_dot_quote(f'{name} ({count})')}];")
    edge_names = sorted(
        (names[dag.nodes[u].representative], names[dag.nodes[v].representative])
        for u, v in dag.edges
    )
    for parent, child in edge_names:
        lines.append(f"  {_dot_quote(parent)} -> {_dot_quote(child)};")
    lines.append("}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def write_similarity_csv(matrix: SimilarityMatrix, table: GroupTable, path) -> None:
    """CSV matrix dump: group1,group2,intersection,jaccard,hpi.

    Name pairs are ordered lexicographically within a row and rows are sorted
    by (group1, group2), so the file does not depend on internal ids.
    """
    names = export_names(table.sorted_keys())
    rows = []
    for rec in matrix:
        n1, n2 = sorted((names[rec.g1], names[rec.g2]))
        rows.append((n1, n2, rec.intersection, rec.jaccard, rec.hpi))
    rows.sort(key=lambda r: (r[0], r[1]))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("group1,group2,intersection,jaccard,hpi\n")
        for n1, n2, inter, jaccard, hpi in rows:
            fh.write(f"{_csv_field(n1)},{_csv_field(n2)},{inter},{jaccard!r},{hpi!r}\n")


def _csv_field(value: str) -> str:
    if any(c in value for c in ',"\n'):
        return '"' + value.replace('"', '""') + '"'
    return value


def read_similarity_csv(path, table: GroupTable) -> SimilarityMatrix:
    """Rebuild a similarity matrix from its CSV dump and the group table."""
    import csv

    names = export_names(table.sorted_keys())
    by_name = {name: key for key, name in names.items()}
    records = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["group1", "group2", "intersection", "jaccard", "hpi"]:
            raise KghierError(f"{path}: not a similarity CSV")
        for lineno, row in enumerate(reader, start=2):
            try:
                name1, name2, inter, jaccard, hpi = row
                record = (int(inter), float(jaccard), float(hpi))
            except ValueError:
                raise KghierError(f"{path}:{lineno}: malformed similarity row") from None
            try:
                k1, k2 = by_name[name1], by_name[name2]
            except KeyError as exc:
                raise KghierError(f"{path}:{lineno}: unknown group {exc.args[0]!r}") from None
            if k2.sort_key < k1.sort_key:
                k1, k2 = k2, k1
            records.append(SimilarityRecord(k1, k2, *record))
    records.sort(key=lambda r: (r.g1.sort_key, r.g2.sort_key))
    return SimilarityMatrix(records=tuple(records), group_count=len(table))


def export_group_table_json(table: GroupTable, path) -> None:
    """Dump the table as {display-name: sorted entity strings}."""
    names = export_names(table.sorted_keys())
    out = {
        names[key]: _entity_strings(table.symbols, members)
        for key, members in table.groups.items()
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({name: out[name] for name in sorted(out)}, fh,
                  ensure_ascii=False, indent=2)
        fh.write("\n")


def load_group_table_json(path, alpha: int | None = None) -> GroupTable:
    """Rebuild a group table from its JSON dump.

    The dump does not carry the original (predicate, object) ids, so each
    group gets a synthetic anchor pair in sorted-name order; only the display
    name and member set matter downstream.
    """
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise KghierError(f"{path}: expected an object mapping name -> members")
    symbols = SymbolTable()
    groups: dict[GroupKey, np.ndarray] = {}
    min_size = None
    for idx, name in enumerate(sorted(data)):
        members = data[name]
        if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
            raise KghierError(f"{path}: group {name!r} is not a list of entity strings")
        ids = np.unique(np.array(
            [symbols.intern_entity(m) for m in members], dtype=np.int64,
        ))
        if ids.size == 0:
            raise KghierError(f"{path}: group {name!r} has no members")
        symbols.intern_predicate(name)
        groups[GroupKey(idx, idx, name)] = ids
        min_size = ids.size if min_size is None else min(min_size, ids.size)
    if alpha is None:
        alpha = int(min_size) if min_size is not None else 1
    return GroupTable(groups, alpha, symbols)


def viewer_bundle_dir() -> Path:
    return Path(__file__).parent / "viewer_assets"


def emit_viewer(document_path, output_dir, bundle_dir=None) -> list[Path]:
    """Copy the static viewer next to the document so it renders offline.

    The document is validated first; violations are reported with the
    offending keys. The data is also inlined into the entry page because
    browsers refuse fetches from ``file://`` pages.
    """
    document = load_document(document_path)
    problems = validate_document(document)
    if problems:
        raise DocumentError(problems)

    bundle = Path(bundle_dir) if bundle_dir is not None else viewer_bundle_dir()
    entry = bundle / "index.html"
    if not entry.is_file():
        raise KghierError(
            f"viewer bundle not found at {bundle}; build the frontend first "
            "(cd frontend && npm install && npm run build)"
        )

    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for item in sorted(bundle.iterdir()):
        if item.name == "index.html" or not item.is_file():
            continue
        target = out / item.name
        shutil.copyfile(item, target)
        written.append(target)

    data_file = out / "hierarchy.json"
    shutil.copyfile(document_path, data_file)
    written.append(data_file)

    html = entry.read_text(encoding="utf-8")
    placeholder = '<script id="hierarchy-data" type="application/json">'
    if placeholder in html:
        payload = json.dumps(document, ensure_ascii=False).replace("</", "<\\/")
        start = html.index(placeholder) + len(placeholder)
        end = html.index("</script>", start)
        html = html[:start] + payload + html[end:]
    entry_out = out / "index.html"
    entry_out.write_text(html, encoding="utf-8")
    written.append(entry_out)
    return sorted(written)
