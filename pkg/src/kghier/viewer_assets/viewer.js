"use strict";
(() => {
  // src/layout.ts
  var RING_GAP_MIN = 70;
  function pruneCollapsed(node, collapsed) {
    const children = collapsed.has(node.name) ? [] : node.children.map((child) => pruneCollapsed(child, collapsed));
    return { node, children };
  }
  function prunedDepth(p) {
    return p.children.reduce((acc, c) => Math.max(acc, prunedDepth(c)), p.node.depth);
  }
  function radialLayout(state, size = 900) {
    const pruned = pruneCollapsed(state.root, state.collapsed);
    const depth = Math.max(1, prunedDepth(pruned));
    const ring = Math.max(RING_GAP_MIN, (size / 2 - 60) / depth);
    const extent = ring * depth;
    const center = extent + 60;
    let leafCount = 0;
    const countLeaves = (p) => {
      if (p.children.length === 0) return 1;
      return p.children.reduce((acc, c) => acc + countLeaves(c), 0);
    };
    leafCount = countLeaves(pruned);
    const placed = [];
    let nextLeaf = 0;
    const place = (p, parent) => {
      let angle;
      const kids = p.children;
      const entry = {
        node: p.node,
        x: 0,
        y: 0,
        angle: 0,
        radius: p.node.depth * ring,
        collapsed: state.collapsed.has(p.node.name),
        parent
      };
      if (kids.length === 0) {
        angle = (nextLeaf + 0.5) / leafCount * 2 * Math.PI;
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
    placed.reverse();
    return { placed, width: center * 2, height: center * 2 };
  }
  function linearLayout(state, rowHeight = 26) {
    const pruned = pruneCollapsed(state.root, state.collapsed);
    const depth = Math.max(1, prunedDepth(pruned));
    const column = 220;
    const placed = [];
    let nextRow = 0;
    const place = (p, parent) => {
      const entry = {
        node: p.node,
        x: 0,
        y: 0,
        angle: 0,
        radius: p.node.depth * column,
        collapsed: state.collapsed.has(p.node.name),
        parent
      };
      let y;
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
      height: Math.max(nextRow, 1) * rowHeight + 40
    };
  }

  // src/types.ts
  var SYNTHETIC_ROOT = "ALL";

  // src/model.ts
  function attach(tree, depth, byName) {
    return {
      name: tree.name,
      depth,
      children: tree.children.map((child) => attach(child, depth + 1, byName)),
      detail: byName.get(tree.name) ?? null
    };
  }
  function buildState(document2) {
    const byName = new Map(document2.nodes.map((node) => [node.name, node]));
    return {
      document: document2,
      root: attach(document2.tree, 0, byName),
      collapsed: /* @__PURE__ */ new Set(),
      hovered: null
    };
  }
  function toggleCollapsed(state, name) {
    if (name === SYNTHETIC_ROOT) return;
    if (state.collapsed.has(name)) {
      state.collapsed.delete(name);
    } else {
      state.collapsed.add(name);
    }
  }
  function nodeLabel(node) {
    return node.detail ? `${node.name} (${node.detail.member_count})` : node.name;
  }
  function hoverText(node) {
    if (!node.detail) return "synthetic root";
    const { member_count: count, members, aliases } = node.detail;
    const parts = [`${node.name}: ${count} members`];
    if (aliases.length > 1) {
      parts.push(`aliases: ${aliases.join(", ")}`);
    }
    if (members.length > 0) {
      const suffix = members.length < count ? `, \u2026` : "";
      parts.push(`sample: ${members.join(", ")}${suffix}`);
    }
    return parts.join("\n");
  }

  // src/render.ts
  function esc(text) {
    return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
  }
  function nodeMarkup(p, radial) {
    const fill = p.collapsed ? "#2b6cb0" : p.node.children.length > 0 ? "#ffffff" : "#9ae6b4";
    const title = esc(hoverText(p.node));
    const deg = p.angle * 180 / Math.PI - 90;
    const flip = p.angle > Math.PI;
    let label;
    if (radial && p.parent !== null) {
      const rotate = flip ? deg + 180 : deg;
      const offset = flip ? -8 : 8;
      label = `<text transform="translate(${p.x.toFixed(2)},${p.y.toFixed(2)}) rotate(${rotate.toFixed(2)})" x="${offset}" dy="0.32em"${flip ? ' text-anchor="end"' : ""}>${esc(nodeLabel(p.node))}</text>`;
    } else {
      label = `<text x="${(p.x + 8).toFixed(2)}" y="${(p.y + 4).toFixed(2)}">${esc(nodeLabel(p.node))}</text>`;
    }
    return `<g class="node" data-name="${esc(p.node.name)}"><title>${title}</title><circle cx="${p.x.toFixed(2)}" cy="${p.y.toFixed(2)}" r="5" fill="${fill}" stroke="#2d3748" stroke-width="1.2"/>` + label + "</g>";
  }
  function edgeMarkup(p) {
    const parent = p.parent;
    return `<path class="link" d="M${parent.x.toFixed(2)},${parent.y.toFixed(2)} L${p.x.toFixed(2)},${p.y.toFixed(2)}"/>`;
  }
  function renderSvg(layout, radial) {
    const edges = layout.placed.filter((p) => p.parent !== null).map(edgeMarkup);
    const nodes = layout.placed.map((p) => nodeMarkup(p, radial));
    return `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${layout.width} ${layout.height}" width="${layout.width}" height="${layout.height}"><g class="links">${edges.join("")}</g><g class="nodes">${nodes.join("")}</g></svg>`;
  }
  function renderErrorPanel(problems) {
    const items = problems.map((p) => `<li>${esc(p)}</li>`).join("");
    return `<div class="error-panel"><h2>Invalid hierarchy document</h2><ul>${items}</ul></div>`;
  }
  function renderEmptyMessage() {
    return '<div class="empty-message">no groups</div>';
  }
  function renderHoverPanel(state) {
    if (state.hovered === null) return "";
    const find = (nodes = [state.root]) => {
      for (const node of nodes) {
        if (node.name === state.hovered) return hoverText(node);
        const below = find(node.children);
        if (below !== null) return below;
      }
      return null;
    };
    const text = find();
    return text === null ? "" : `<pre class="hover-panel">${esc(text)}</pre>`;
  }

  // src/validate.ts
  var DOCUMENT_KEYS = ["metadata", "nodes", "tree", "dag_edges"];
  var METADATA_KEYS = [
    "dataset",
    "alpha",
    "theta",
    "tool_version",
    "group_count",
    "node_count",
    "edge_count",
    "root_count"
  ];
  var NODE_KEYS = ["name", "aliases", "member_count", "members"];
  function isObject(value) {
    return typeof value === "object" && value !== null && !Array.isArray(value);
  }
  function validateDocument(value) {
    const problems = [];
    if (!isObject(value)) {
      return ["document: not an object"];
    }
    for (const key of DOCUMENT_KEYS) {
      if (!(key in value)) problems.push(`${key}: missing`);
    }
    if (problems.length > 0) return problems;
    const meta = value.metadata;
    if (!isObject(meta)) {
      problems.push("metadata: not an object");
    } else {
      for (const key of METADATA_KEYS) {
        if (!(key in meta)) problems.push(`metadata.${key}: missing`);
      }
    }
    const names = /* @__PURE__ */ new Set();
    const nodes = value.nodes;
    if (!Array.isArray(nodes)) {
      problems.push("nodes: not an array");
    } else {
      nodes.forEach((node, idx) => {
        if (!isObject(node)) {
          problems.push(`nodes[${idx}]: not an object`);
          return;
        }
        for (const key of NODE_KEYS) {
          if (!(key in node)) problems.push(`nodes[${idx}].${key}: missing`);
        }
        if (typeof node.name === "string") {
          if (names.has(node.name)) problems.push(`nodes[${idx}].name: duplicate ${node.name}`);
          names.add(node.name);
        }
        if (typeof node.member_count !== "number" || node.member_count < 0) {
          problems.push(`nodes[${idx}].member_count: not a non-negative number`);
        }
      });
    }
    const tree = value.tree;
    if (!isObject(tree) || tree.name !== SYNTHETIC_ROOT) {
      problems.push(`tree.name: root must be ${JSON.stringify(SYNTHETIC_ROOT)}`);
    } else {
      const stack = (Array.isArray(tree.children) ? tree.children : []).map((child) => [child, "tree"]);
      while (stack.length > 0) {
        const [node, where] = stack.pop();
        if (!isObject(node) || typeof node.name !== "string") {
          problems.push(`${where}.children: entry without a name`);
          continue;
        }
        if (!names.has(node.name)) {
          problems.push(`${where}.children: dangling reference ${node.name}`);
        }
        const children = Array.isArray(node.children) ? node.children : [];
        for (const child of children) stack.push([child, `${where}.${node.name}`]);
      }
    }
    const edges = value.dag_edges;
    if (!Array.isArray(edges)) {
      problems.push("dag_edges: not an array");
    } else {
      edges.forEach((edge, idx) => {
        if (!Array.isArray(edge) || edge.length !== 2) {
          problems.push(`dag_edges[${idx}]: not a [parent, child] pair`);
          return;
        }
        for (const name of edge) {
          if (typeof name !== "string" || !names.has(name)) {
            problems.push(`dag_edges[${idx}]: dangling reference ${String(name)}`);
          }
        }
      });
    }
    return problems;
  }

  // src/main.ts
  function drawing(state, mode) {
    const layout = mode === "radial" ? radialLayout(state) : linearLayout(state);
    return renderSvg(layout, mode === "radial");
  }
  function start(doc) {
    const app = document.getElementById("app");
    const meta = document.getElementById("meta");
    const hover = document.getElementById("hover");
    const toggle = document.getElementById("mode-toggle");
    if (!app || !meta || !hover || !toggle) return;
    meta.textContent = `${doc.metadata.dataset}: ${doc.metadata.node_count} nodes, ${doc.metadata.edge_count} edges, ${doc.metadata.root_count} roots (\u03B1=${doc.metadata.alpha}, \u03B8=${doc.metadata.theta})`;
    if (doc.nodes.length === 0) {
      app.innerHTML = renderEmptyMessage();
      return;
    }
    const state = buildState(doc);
    let mode = "radial";
    const repaint = () => {
      app.innerHTML = drawing(state, mode);
      for (const el of Array.from(app.querySelectorAll("g.node"))) {
        const name = el.dataset.name;
        el.addEventListener("click", () => {
          toggleCollapsed(state, name);
          repaint();
        });
        el.addEventListener("mouseenter", () => {
          state.hovered = name;
          hover.innerHTML = renderHoverPanel(state);
        });
        el.addEventListener("mouseleave", () => {
          state.hovered = null;
          hover.innerHTML = "";
        });
      }
    };
    toggle.addEventListener("click", () => {
      mode = mode === "radial" ? "linear" : "radial";
      toggle.textContent = mode === "radial" ? "linear view" : "radial view";
      repaint();
    });
    repaint();
  }
  function fail(problems) {
    const app = document.getElementById("app");
    if (app) app.innerHTML = renderErrorPanel(problems);
  }
  async function loadDocument() {
    const inline = document.getElementById("hierarchy-data");
    if (inline && inline.textContent && inline.textContent.trim().length > 0) {
      return JSON.parse(inline.textContent);
    }
    const response = await fetch("hierarchy.json");
    if (!response.ok) {
      throw new Error(`fetching hierarchy.json failed: ${response.status}`);
    }
    return response.json();
  }
  loadDocument().then((raw) => {
    const problems = validateDocument(raw);
    if (problems.length > 0) {
      fail(problems);
    } else {
      start(raw);
    }
  }).catch((err) => {
    fail([err instanceof Error ? err.message : String(err)]);
  });
})();
