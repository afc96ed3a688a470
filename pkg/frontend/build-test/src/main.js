"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
const layout_1 = require("./layout");
const model_1 = require("./model");
const render_1 = require("./render");
const validate_1 = require("./validate");
function drawing(state, mode) {
    const layout = mode === 'radial' ? (0, layout_1.radialLayout)(state) : (0, layout_1.linearLayout)(state);
    return (0, render_1.renderSvg)(layout, mode === 'radial');
}
function start(doc) {
    const app = document.getElementById('app');
    const meta = document.getElementById('meta');
    const hover = document.getElementById('hover');
    const toggle = document.getElementById('mode-toggle');
    if (!app || !meta || !hover || !toggle)
        return;
    meta.textContent =
        `${doc.metadata.dataset}: ${doc.metadata.node_count} nodes, ` +
            `${doc.metadata.edge_count} edges, ${doc.metadata.root_count} roots ` +
            `(α=${doc.metadata.alpha}, θ=${doc.metadata.theta})`;
    if (doc.nodes.length === 0) {
        app.innerHTML = (0, render_1.renderEmptyMessage)();
        return;
    }
    const state = (0, model_1.buildState)(doc);
    let mode = 'radial';
    const repaint = () => {
        app.innerHTML = drawing(state, mode);
        for (const el of Array.from(app.querySelectorAll('g.node'))) {
            const name = el.dataset.name;
            el.addEventListener('click', () => {
                (0, model_1.toggleCollapsed)(state, name);
                repaint();
            });
            el.addEventListener('mouseenter', () => {
                state.hovered = name;
                hover.innerHTML = (0, render_1.renderHoverPanel)(state);
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
function fail(problems) {
    const app = document.getElementById('app');
    if (app)
        app.innerHTML = (0, render_1.renderErrorPanel)(problems);
}
async function loadDocument() {
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
    const problems = (0, validate_1.validateDocument)(raw);
    if (problems.length > 0) {
        fail(problems);
    }
    else {
        start(raw);
    }
})
    .catch((err) => {
    fail([err instanceof Error ? err.message : String(err)]);
});
