"use strict";
var __importDefault = (this && this.__importDefault) || function (mod) {
    return (mod && mod.__esModule) ? mod : { "default": mod };
};
Object.defineProperty(exports, "__esModule", { value: true });
const strict_1 = __importDefault(require("node:assert/strict"));
const node_test_1 = require("node:test");
const model_1 = require("../src/model");
const fixture_1 = require("./fixture");
(0, node_test_1.test)('the sample document yields five nodes: four groups plus the root', () => {
    const state = (0, model_1.buildState)((0, fixture_1.vennDocument)());
    strict_1.default.equal((0, model_1.countNodes)(state.root), 5);
    strict_1.default.equal((0, model_1.visibleNodes)(state).length, 5);
});
(0, node_test_1.test)('depths follow the containment chain', () => {
    const state = (0, model_1.buildState)((0, fixture_1.vennDocument)());
    strict_1.default.equal((0, model_1.maxDepth)(state.root), 3); // Europe -> Ireland -> Dublin
    strict_1.default.equal(state.root.depth, 0);
});
(0, node_test_1.test)('collapsing hides the subtree, not the node itself', () => {
    const state = (0, model_1.buildState)((0, fixture_1.vennDocument)());
    (0, model_1.toggleCollapsed)(state, 'LiveIn_Europe');
    const names = (0, model_1.visibleNodes)(state).map((n) => n.name);
    strict_1.default.deepEqual(names, ['ALL', 'LiveIn_Europe']);
});
(0, node_test_1.test)('toggling twice restores the previous drawing exactly', () => {
    const state = (0, model_1.buildState)((0, fixture_1.vennDocument)());
    const before = (0, model_1.visibleNodes)(state).map((n) => n.name);
    (0, model_1.toggleCollapsed)(state, 'LiveIn_Ireland');
    strict_1.default.notDeepEqual((0, model_1.visibleNodes)(state).map((n) => n.name), before);
    (0, model_1.toggleCollapsed)(state, 'LiveIn_Ireland');
    strict_1.default.deepEqual((0, model_1.visibleNodes)(state).map((n) => n.name), before);
});
(0, node_test_1.test)('the synthetic root cannot be collapsed away', () => {
    const state = (0, model_1.buildState)((0, fixture_1.vennDocument)());
    (0, model_1.toggleCollapsed)(state, 'ALL');
    strict_1.default.equal((0, model_1.visibleNodes)(state).length, 5);
});
(0, node_test_1.test)('labels show the member count', () => {
    const state = (0, model_1.buildState)((0, fixture_1.vennDocument)());
    const europe = state.root.children[0];
    strict_1.default.equal((0, model_1.nodeLabel)(europe), 'LiveIn_Europe (6)');
    strict_1.default.equal((0, model_1.nodeLabel)(state.root), 'ALL');
});
(0, node_test_1.test)('hover text carries the member sample', () => {
    const state = (0, model_1.buildState)((0, fixture_1.vennDocument)());
    const europe = state.root.children[0];
    const text = (0, model_1.hoverText)(europe);
    strict_1.default.match(text, /6 members/);
    strict_1.default.match(text, /p1, p2/);
});
