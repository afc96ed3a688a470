import { DocumentNode, HierarchyDocument, SYNTHETIC_ROOT, TreeNode } from './types';

/** One drawable node: tree position metadata plus the group details. */
export interface ModelNode {
  name: string;
  depth: number;
  children: ModelNode[];
  detail: DocumentNode | null; // null for the synthetic root
}

export interface ViewerState {
  document: HierarchyDocument;
  root: ModelNode;
  collapsed: Set<string>;
  hovered: string | null;
}

function attach(tree: TreeNode, depth: number, byName: Map<string, DocumentNode>): ModelNode {
  return {
    name: tree.name,
    depth,
    children: tree.children.map((child) => attach(child, depth + 1, byName)),
    detail: byName.get(tree.name) ?? null,
  };
}

export function buildState(document: HierarchyDocument): ViewerState {
  const byName = new Map(document.nodes.map((node) => [node.name, node]));
  return {
    document,
    root: attach(document.tree, 0, byName),
    collapsed: new Set(),
    hovered: null,
  };
}

/** Toggle the collapse flag of one node; toggling twice restores the state. */
export function toggleCollapsed(state: ViewerState, name: string): void {
  if (name === SYNTHETIC_ROOT) return;
  if (state.collapsed.has(name)) {
    state.collapsed.delete(name);
  } else {
    state.collapsed.add(name);
  }
}

/** Nodes that are drawn: children of collapsed nodes are pruned. */
export function visibleNodes(state: ViewerState): ModelNode[] {
  const out: ModelNode[] = [];
  const walk = (node: ModelNode) => {
    out.push(node);
    if (!state.collapsed.has(node.name)) {
      node.children.forEach(walk);
    }
  };
  walk(state.root);
  return out;
}

export function countNodes(root: ModelNode): number {
  return 1 + root.children.reduce((acc, child) => acc + countNodes(child), 0);
}

export function maxDepth(root: ModelNode): number {
  return root.children.reduce((acc, child) => Math.max(acc, maxDepth(child)), root.depth);
}

/** Label shown next to a node: "name (member count)". */
export function nodeLabel(node: ModelNode): string {
  return node.detail ? `${node.name} (${node.detail.member_count})` : node.name;
}

/** Hover text: the member sample carried by the document. */
export function hoverText(node: ModelNode): string {
  if (!node.detail) return 'synthetic root';
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
