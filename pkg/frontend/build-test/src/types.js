"use strict";
/** Shape of the hierarchy document emitted by the pipeline. */
Object.defineProperty(exports, "__esModule", { value: true });
exports.SYNTHETIC_ROOT = void 0;
/** Name of the synthetic node the tree hangs off. */
exports.SYNTHETIC_ROOT = 'ALL';
