"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
exports.vennDocument = vennDocument;
exports.balancedDocument = balancedDocument;
const node_fs_1 = require("node:fs");
const node_path_1 = require("node:path");
/** The six-person sample document, produced by the pipeline itself. */
function vennDocument() {
    const raw = (0, node_fs_1.readFileSync)((0, node_path_1.join)(__dirname, '..', '..', 'test', 'fixtures', 'venn.json'), 'utf-8');
    return JSON.parse(raw);
}
/** Synthetic balanced document: fanout^levels leaves, for layout checks. */
function balancedDocument(fanout, levels) {
    const nodes = [];
    const edges = [];
    let counter = 0;
    const grow = (depth, parent) => {
        const name = `n${counter++}`;
        nodes.push({
            name,
            aliases: [name],
            member_count: 10 ** (levels - depth),
            members: [`m${counter}`],
        });
        if (parent !== null)
            edges.push([parent, name]);
        const children = depth < levels
            ? Array.from({ length: fanout }, () => grow(depth + 1, name))
            : [];
        return { name, children };
    };
    const top = Array.from({ length: fanout }, () => grow(1, null));
    return {
        metadata: {
            dataset: 'balanced',
            alpha: 1,
            theta: 0.9,
            tool_version: '0.0.0',
            group_count: nodes.length,
            node_count: nodes.length,
            edge_count: edges.length,
            root_count: fanout,
        },
        nodes,
        tree: { name: 'ALL', children: top },
        dag_edges: edges,
    };
}
