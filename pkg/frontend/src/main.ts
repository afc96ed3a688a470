import { linearLayout, radialLayout } from './layout';
import { buildState, toggleCollapsed, ViewerState } from './model';
import { renderEmptyMessage, renderErrorPanel, renderHoverPanel, renderSvg } from './render';
import { validateDocument } from './validate';
import { HierarchyDocument } from './types';

type Mode = 'radial' | 'linear';

function drawing(state: ViewerState, mode: Mode): string {
  const layout = mode === 'radial' ? radialLayout(state) : linearLayout(state);
  return renderSvg(layout, mode === 'radial');
}

function start(doc: HierarchyDocument): void {
  const app = document.getElementById('app');
  const meta = document.getElementById('meta');
  const hover = document.getElementById('hover');
  const toggle = document.getElementById('mode-toggle');
  if (!app || !meta || !hover || !toggle) return;

  meta.textContent =
    `${doc.metadata.dataset}: ${doc.metadata.node_count} nodes, ` +
    `${doc.metadata.edge_count} edges, ${doc.metadata.root_count} roots ` +
    `(α=${doc.metadata.alpha}, θ=${doc.metadata.theta})`;

  if (doc.nodes.length === 0) {
    app.innerHTML = renderEmptyMessage();
    return;
  }

  const state = buildState(doc);
  let mode: Mode = 'radial';

  const repaint = () => {
    app.innerHTML = drawing(state, mode);
    for (const el of Array.from(app.querySelectorAll<SVGGElement>('g.node'))) {
      const name = el.dataset.name as string;
      el.addEventListener('click', () => {
        toggleCollapsed(state, name);
        repaint();
      });
      el.addEventListener('mouseenter', () => {
        state.hovered = name;
        hover.innerHTML = renderHoverPanel(state);
      });
      el.addEventListener('mouseleave', () => {
        state.hovered = null;
        hover.innerHTML = '';
      });
    }
  };

  toggle.addEventListener('click', () => {
    mode = mode === 'radial' ? 'linear' : 'radial';
    toggle.textContent = mode === 'radial' ? 'linear view' : 'radial view';
    repaint();
  });
  repaint();
}

function fail(problems: string[]): void {
  const app = document.getElementById('app');
  if (app) app.innerHTML = renderErrorPanel(problems);
}

async function loadDocument(): Promise<unknown> {
  const inline = document.getElementById('hierarchy-data');
  if (inline && inline.textContent && inline.textContent.trim().length > 0) {
    return JSON.parse(inline.textContent);
  }
  const response = await fetch('hierarchy.json');
  if (!response.ok) {
    throw new Error(`fetching hierarchy.json failed: ${response.status}`);
  }
  return response.json();
}

loadDocument()
  .then((raw) => {
    const problems = validateDocument(raw);
    if (problems.length > 0) {
      fail(problems);
    } else {
      start(raw as HierarchyDocument);
    }
  })
  .catch((err: unknown) => {
    fail([err instanceof Error ? err.message : String(err)]);
  });
