import { ModelNode, ViewerState } from './model';

export interface PlacedNode {
  node: ModelNode;
  x: number;
  y: number;
  /** Angle in radians, only meaningful for the radial layout. */
  angle: number;
  /** Ring radius (radial) or column offset (linear). */
  radius: number;
  collapsed: boolean;
  parent: PlacedNode | null;
}

export interface Layout {
  placed: PlacedNode[];
  width: number;
  height: number;
}

const RING_GAP_MIN = 70;

interface Pruned {
  node: ModelNode;
  children: Pruned[];
}

function pruneCollapsed(node: ModelNode, collapsed: Set<string>): Pruned {
  const children = collapsed.has(node.name)
    ? []
    : node.children.map((child) => pruneCollapsed(child, collapsed));
  return { node, children };
}

function prunedDepth(p: Pruned): number {
  return p.children.reduce((acc, c) => Math.max(acc, prunedDepth(c)), p.node.depth);
}

/**
 * Radial tree: the synthetic root sits at the center, every depth gets its
 * own ring, leaves divide the full circle evenly and inner nodes take the
 * midpoint of their children's span.
 */
export function radialLayout(state: ViewerState, size = 900): Layout {
  const pruned = pruneCollapsed(state.root, state.collapsed);
  const depth = Math.max(1, prunedDepth(pruned));
  const ring = Math.max(RING_GAP_MIN, (size / 2 - 60) / depth);
  const extent = ring * depth;
  const center = extent + 60;

  let leafCount = 0;
  const countLeaves = (p: Pruned): number => {
    if (p.children.length === 0) return 1;
    return p.children.reduce((acc, c) => acc + countLeaves(c), 0);
  };
  leafCount = countLeaves(pruned);

  const placed: PlacedNode[] = [];
  let nextLeaf = 0;
  const place = (p: Pruned, parent: PlacedNode | null): PlacedNode => {
    let angle: number;
    const kids: Pruned[] = p.children;
    const entry: PlacedNode = {
      node: p.node, x: 0, y: 0, angle: 0,
      radius: p.node.depth * ring,
      collapsed: state.collapsed.has(p.node.name),
      parent,
    };
    if (kids.length === 0) {
      angle = ((nextLeaf + 0.5) / leafCount) * 2 * Math.PI;
      nextLeaf += 1;
    } else {
      const childEntries = kids.map((c) => place(c, entry));
      angle = (childEntries[0].angle + childEntries[childEntries.length - 1].angle) / 2;
    }
    entry.angle = angle;
    entry.x = center + entry.radius * Math.sin(angle);
    entry.y = center - entry.radius * Math.cos(angle);
    placed.push(entry);
    return entry;
  };
  place(pruned, null);
  placed.reverse(); // parents before children
  return { placed, width: center * 2, height: center * 2 };
}

/** Left-to-right tree, one row per visible leaf; the convenience view. */
export function linearLayout(state: ViewerState, rowHeight = 26): Layout {
  const pruned = pruneCollapsed(state.root, state.collapsed);
  const depth = Math.max(1, prunedDepth(pruned));
  const column = 220;
  const placed: PlacedNode[] = [];
  let nextRow = 0;
  const place = (p: Pruned, parent: PlacedNode | null): PlacedNode => {
    const entry: PlacedNode = {
      node: p.node, x: 0, y: 0, angle: 0,
      radius: p.node.depth * column,
      collapsed: state.collapsed.has(p.node.name),
      parent,
    };
    let y: number;
    if (p.children.length === 0) {
      y = (nextRow + 0.5) * rowHeight;
      nextRow += 1;
    } else {
      const childEntries = p.children.map((c) => place(c, entry));
      y = (childEntries[0].y + childEntries[childEntries.length - 1].y) / 2;
    }
    entry.x = 40 + entry.radius;
    entry.y = y + 20;
    placed.push(entry);
    return entry;
  };
  place(pruned, null);
  placed.reverse();
  return {
    placed,
    width: 40 + (depth + 1) * column,
    height: Math.max(nextRow, 1) * rowHeight + 40,
  };
}
