"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
exports.validateDocument = validateDocument;
exports.asDocument = asDocument;
const types_1 = require("./types");
const DOCUMENT_KEYS = ['metadata', 'nodes', 'tree', 'dag_edges'];
const METADATA_KEYS = [
    'dataset', 'alpha', 'theta', 'tool_version',
    'group_count', 'node_count', 'edge_count', 'root_count',
];
const NODE_KEYS = ['name', 'aliases', 'member_count', 'members'];
function isObject(value) {
    return typeof value === 'object' && value !== null && !Array.isArray(value);
}
/**
 * Check a parsed JSON value against the document schema.
 * Returns one message per violation, each naming the offending key;
 * an empty list means the value is a valid HierarchyDocument.
 */
function validateDocument(value) {
    const problems = [];
    if (!isObject(value)) {
        return ['document: not an object'];
    }
    for (const key of DOCUMENT_KEYS) {
        if (!(key in value))
            problems.push(`${key}: missing`);
    }
    if (problems.length > 0)
        return problems;
    const meta = value.metadata;
    if (!isObject(meta)) {
        problems.push('metadata: not an object');
    }
    else {
        for (const key of METADATA_KEYS) {
            if (!(key in meta))
                problems.push(`metadata.${key}: missing`);
        }
    }
    const names = new Set();
    const nodes = value.nodes;
    if (!Array.isArray(nodes)) {
        problems.push('nodes: not an array');
    }
    else {
        nodes.forEach((node, idx) => {
            if (!isObject(node)) {
                problems.push(`nodes[${idx}]: not an object`);
                return;
            }
            for (const key of NODE_KEYS) {
                if (!(key in node))
                    problems.push(`nodes[${idx}].${key}: missing`);
            }
            if (typeof node.name === 'string') {
                if (names.has(node.name))
                    problems.push(`nodes[${idx}].name: duplicate ${node.name}`);
                names.add(node.name);
            }
            if (typeof node.member_count !== 'number' || node.member_count < 0) {
                problems.push(`nodes[${idx}].member_count: not a non-negative number`);
            }
        });
    }
    const tree = value.tree;
    if (!isObject(tree) || tree.name !== types_1.SYNTHETIC_ROOT) {
        problems.push(`tree.name: root must be ${JSON.stringify(types_1.SYNTHETIC_ROOT)}`);
    }
    else {
        const stack = (Array.isArray(tree.children) ? tree.children : [])
            .map((child) => [child, 'tree']);
        while (stack.length > 0) {
            const [node, where] = stack.pop();
            if (!isObject(node) || typeof node.name !== 'string') {
                problems.push(`${where}.children: entry without a name`);
                continue;
            }
            if (!names.has(node.name)) {
                problems.push(`${where}.children: dangling reference ${node.name}`);
            }
            const children = Array.isArray(node.children) ? node.children : [];
            for (const child of children)
                stack.push([child, `${where}.${node.name}`]);
        }
    }
    const edges = value.dag_edges;
    if (!Array.isArray(edges)) {
        problems.push('dag_edges: not an array');
    }
    else {
        edges.forEach((edge, idx) => {
            if (!Array.isArray(edge) || edge.length !== 2) {
                problems.push(`dag_edges[${idx}]: not a [parent, child] pair`);
                return;
            }
            for (const name of edge) {
                if (typeof name !== 'string' || !names.has(name)) {
                    problems.push(`dag_edges[${idx}]: dangling reference ${String(name)}`);
                }
            }
        });
    }
    return problems;
}
/** Narrow an unknown value after a clean validation run. */
function asDocument(value) {
    const problems = validateDocument(value);
    if (problems.length > 0) {
        throw new Error(`invalid document: ${problems.join('; ')}`);
    }
    return value;
}
