import { describe, expect, it } from "vitest";

import { fitView, toCanvas, toWorld } from "../src/mapping.js";
import { buildLiftedPanel, buildScene, upperHull } from "../src/scene.js";
import { initialState, reduce } from "../src/state.js";
import { CurveDocument, LimitPayload, SamplePayload } from "../src/types.js";

const DOC: CurveDocument = {
    degree: 2,
    knots: [0, 0, 0, 0.25, 1, 1, 1],
    points: [[0, 0], [1, 3], [3.5, 2], [4, -1]],
    weights: [3, 1, 2, 2],
    lifting: [1, 3, 2, 0],
};

function stateWithPayloads(sample: SamplePayload | null, limit: LimitPayload | null) {
    let state = initialState(DOC);
    if (sample) {
        state = reduce(state, { kind: "issue", stream: "sample" });
        state = reduce(state, { kind: "sample-payload", seq: 1, data: sample });
    }
    if (limit) {
        state = reduce(state, { kind: "issue", stream: "limit" });
        state = reduce(state, { kind: "limit-payload", seq: 1, data: limit });
    }
    return state;
}

describe("buildScene", () => {
    it("uses the sample payload verbatim as the curve polyline", () => {
        const sample = { t: 1, count: 3, points: [[0, 0], [1.25, 2.5], [4, -1]] };
        const scene = buildScene(stateWithPayloads(sample, null));
        expect(scene.curvePolyline).toBe(sample.points); // same reference, no processing
    });

    it("shows the control polygon only when toggled on", () => {
        let state = stateWithPayloads(null, null);
        expect(buildScene(state).controlPolygon).toBe(DOC.points);
        state = reduce(state, { kind: "toggle-overlay", overlay: "controlPolygon" });
        expect(buildScene(state).controlPolygon).toBeNull();
    });

    it("splits limit pieces into polylines and collapse dots", () => {
        const limit: LimitPayload = {
            pieces: [
                {
                    piece: 1,
                    subset: [0, 1],
                    weights: [3, 1],
                    points: [[0, 0], [1, 3]],
                    coeffs: [1, 1],
                    degenerate: false,
                    samples: [[0, 0], [0.5, 1.5], [1, 3]],
                },
                {
                    piece: 1,
                    subset: [1, 2],
                    weights: [1, 1],
                    points: [[1, 3], [1, 3]],
                    coeffs: [1, 1],
                    degenerate: true,
                },
            ],
        };
        const scene = buildScene(stateWithPayloads(null, limit));
        expect(scene.limitPolylines).toEqual([[[0, 0], [0.5, 1.5], [1, 3]]]);
        expect(scene.limitDots).toEqual([[1, 3]]);
    });

    it("hides the limit overlay when toggled off", () => {
        const limit: LimitPayload = {
            pieces: [
                {
                    piece: 1,
                    subset: [0, 1],
                    weights: [1, 1],
                    points: [[0, 0], [1, 1]],
                    coeffs: [1, 1],
                    degenerate: false,
                },
            ],
        };
        let state = stateWithPayloads(null, limit);
        state = reduce(state, { kind: "toggle-overlay", overlay: "regularControlCurve" });
        const scene = buildScene(state);
        expect(scene.limitPolylines).toEqual([]);
        expect(scene.limitDots).toEqual([]);
    });
});

describe("lifted panel", () => {
    it("plots (i, lift) with its upper hull", () => {
        const panel = buildLiftedPanel(initialState(DOC));
        expect(panel).not.toBeNull();
        expect(panel!.points).toEqual([[0, 1], [1, 3], [2, 2], [3, 0]]);
        expect(panel!.hull).toEqual([[0, 1], [1, 3], [2, 2], [3, 0]]);
    });

    it("drops sagging points from the hull", () => {
        expect(upperHull([[0, 2], [1, 3], [2, 4], [3, 2], [4, 3]])).toEqual([
            [0, 2],
            [2, 4],
            [4, 3],
        ]);
    });

    it("absorbs collinear points into one edge", () => {
        expect(upperHull([[0, 0], [1, 1], [2, 2]])).toEqual([[0, 0], [2, 2]]);
    });

    it("is hidden when the overlay is off", () => {
        const state = reduce(initialState(DOC), { kind: "toggle-overlay", overlay: "liftedHullPanel" });
        expect(buildLiftedPanel(state)).toBeNull();
    });
});

describe("mapping", () => {
    it("round-trips world and canvas coordinates", () => {
        const m = fitView([[0, 0], [4, 3]], 800, 600);
        for (const q of [[0, 0], [4, 3], [1.5, 2]]) {
            const [x, y] = toCanvas(m, q);
            const back = toWorld(m, x, y);
            expect(back[0]).toBeCloseTo(q[0], 9);
            expect(back[1]).toBeCloseTo(q[1], 9);
        }
    });

    it("flips y so larger world y is higher on screen", () => {
        const m = fitView([[0, 0], [1, 1]], 100, 100);
        const [, yLow] = toCanvas(m, [0, 0]);
        const [, yHigh] = toCanvas(m, [0, 1]);
        expect(yHigh).toBeLessThan(yLow);
    });
});
