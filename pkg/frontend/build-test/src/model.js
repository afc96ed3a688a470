"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
exports.buildState = buildState;
exports.toggleCollapsed = toggleCollapsed;
exports.visibleNodes = visibleNodes;
exports.countNodes = countNodes;
exports.maxDepth = maxDepth;
exports.nodeLabel = nodeLabel;
exports.hoverText = hoverText;
const types_1 = require("./types");
function attach(tree, depth, byName) {
    return {
        name: tree.name,
        depth,
        children: tree.children.map((child) => attach(child, depth + 1, byName)),
        detail: byName.get(tree.name) ?? null,
    };
}
function buildState(document) {
    const byName = new Map(document.nodes.map((node) => [node.name, node]));
    return {
        document,
        root: attach(document.tree, 0, byName),
        collapsed: new Set(),
        hovered: null,
    };
}
/** Toggle the collapse flag of one node; toggling twice restores the state. */
function toggleCollapsed(state, name) {
    if (name === types_1.SYNTHETIC_ROOT)
        return;
    if (state.collapsed.has(name)) {
        state.collapsed.delete(name);
    }
    else {
        state.collapsed.add(name);
    }
}
/** Nodes that are drawn: children of collapsed nodes are pruned. */
function visibleNodes(state) {
    const out = [];
    const walk = (node) => {
        out.push(node);
        if (!state.collapsed.has(node.name)) {
            node.children.forEach(walk);
        }
    };
    walk(state.root);
    return out;
}
function countNodes(root) {
    return 1 + root.children.reduce((acc, child) => acc + countNodes(child), 0);
}
function maxDepth(root) {
    return root.children.reduce((acc, child) => Math.max(acc, maxDepth(child)), root.depth);
}
/** Label shown next to a node: "name (member count)". */
function nodeLabel(node) {
    return node.detail ? `${node.name} (${node.detail.member_count})` : node.name;
}
/** Hover text: the member sample carried by the document. */
function hoverText(node) {
    if (!node.detail)
        return 'synthetic root';
    const { member_count: count, members, aliases } = node.detail;
    const parts = [`${node.name}: ${count} members`];
    if (aliases.length > 1) {
        parts.push(`aliases: ${aliases.join(', ')}`);
    }
    if (members.length > 0) {
        const suffix = members.length < count ? `, …` : '';
        parts.push(`sample: ${members.join(', ')}${suffix}`);
    }
    return parts.join('\n');
}
