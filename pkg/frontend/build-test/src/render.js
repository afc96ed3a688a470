"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
exports.renderSvg = renderSvg;
exports.renderErrorPanel = renderErrorPanel;
exports.renderEmptyMessage = renderEmptyMessage;
exports.renderHoverPanel = renderHoverPanel;
const model_1 = require("./model");
function esc(text) {
    return text
        .replace(/&/g, '&amp;')
        .replace(/</g, '&lt;')
        .replace(/>/g, '&gt;')
        .replace(/"/g, '&quot;');
}
function nodeMarkup(p, radial) {
    const fill = p.collapsed ? '#2b6cb0' : p.node.children.length > 0 ? '#ffffff' : '#9ae6b4';
    const title = esc((0, model_1.hoverText)(p.node));
    const deg = (p.angle * 180) / Math.PI - 90;
    const flip = p.angle > Math.PI;
    let label;
    if (radial && p.parent !== null) {
        const rotate = flip ? deg + 180 : deg;
        const offset = flip ? -8 : 8;
        label = `<text transform="translate(${p.x.toFixed(2)},${p.y.toFixed(2)}) ` +
            `rotate(${rotate.toFixed(2)})" x="${offset}" dy="0.32em"` +
            `${flip ? ' text-anchor="end"' : ''}>${esc((0, model_1.nodeLabel)(p.node))}</text>`;
    }
    else {
        label = `<text x="${(p.x + 8).toFixed(2)}" y="${(p.y + 4).toFixed(2)}">` +
            `${esc((0, model_1.nodeLabel)(p.node))}</text>`;
    }
    return (`<g class="node" data-name="${esc(p.node.name)}">` +
        `<title>${title}</title>` +
        `<circle cx="${p.x.toFixed(2)}" cy="${p.y.toFixed(2)}" r="5" fill="${fill}" ` +
        'stroke="#2d3748" stroke-width="1.2"/>' +
        label +
        '</g>');
}
function edgeMarkup(p) {
    const parent = p.parent;
    return `<path class="link" d="M${parent.x.toFixed(2)},${parent.y.toFixed(2)} ` +
        `L${p.x.toFixed(2)},${p.y.toFixed(2)}"/>`;
}
/** Render one layout to an SVG string; pure, so it is testable off-DOM. */
function renderSvg(layout, radial) {
    const edges = layout.placed.filter((p) => p.parent !== null).map(edgeMarkup);
    const nodes = layout.placed.map((p) => nodeMarkup(p, radial));
    return (`<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${layout.width} ${layout.height}" ` +
        `width="${layout.width}" height="${layout.height}">` +
        `<g class="links">${edges.join('')}</g>` +
        `<g class="nodes">${nodes.join('')}</g>` +
        '</svg>');
}
/** Error panel listing schema violations, each naming the failing key. */
function renderErrorPanel(problems) {
    const items = problems.map((p) => `<li>${esc(p)}</li>`).join('');
    return `<div class="error-panel"><h2>Invalid hierarchy document</h2><ul>${items}</ul></div>`;
}
/** Friendly message for a valid document with nothing in it. */
function renderEmptyMessage() {
    return '<div class="empty-message">no groups</div>';
}
/** Hover panel content for the currently hovered node, if any. */
function renderHoverPanel(state) {
    if (state.hovered === null)
        return '';
    const find = (nodes = [state.root]) => {
        for (const node of nodes) {
            if (node.name === state.hovered)
                return (0, model_1.hoverText)(node);
            const below = find(node.children);
            if (below !== null)
                return below;
        }
        return null;
    };
    const text = find();
    return text === null ? '' : `<pre class="hover-panel">${esc(text)}</pre>`;
}
