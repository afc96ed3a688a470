/** Shape of the hierarchy document emitted by the pipeline. */

export interface DocumentMetadata {
  dataset: string;
  alpha: number;
  theta: number;
  tool_version: string;
  group_count: number;
  node_count: number;
  edge_count: number;
  root_count: number;
}

export interface DocumentNode {
  name: string;
  aliases: string[];
  member_count: number;
  members: string[];
}

export interface TreeNode {
  name: string;
  children: TreeNode[];
}

export interface HierarchyDocument {
  metadata: DocumentMetadata;
  nodes: DocumentNode[];
  tree: TreeNode;
  dag_edges: [string, string][];
}

/** Name of the synthetic node the tree hangs off. */
export const SYNTHETIC_ROOT = 'ALL';
