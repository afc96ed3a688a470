import { readFileSync } from 'node:fs';
import { join } from 'node:path';
import { HierarchyDocument } from '../src/types';

/** The six-person sample document, produced by the pipeline itself. */
export function vennDocument(): HierarchyDocument {
  const raw = readFileSync(join(__dirname, '..', '..', 'test', 'fixtures', 'venn.json'), 'utf-8');
  return JSON.parse(raw) as HierarchyDocument;
}

interface TreeNodeLike { name: string; children: TreeNodeLike[] }

/** Synthetic balanced document: fanout^levels leaves, for layout checks. */
export function balancedDocument(fanout: number, levels: number): HierarchyDocument {
  const nodes: HierarchyDocument['nodes'] = [];
  const edges: [string, string][] = [];
  let counter = 0;
  const grow = (depth: number, parent: string | null): TreeNodeLike => {
    const name = `n${counter++}`;
    nodes.push({
      name,
      aliases: [name],
      member_count: 10 ** (levels - depth),
      members: [`m${counter}`],
    });
    if (parent !== null) edges.push([parent, name]);
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
