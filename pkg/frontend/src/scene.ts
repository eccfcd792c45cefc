import { StudioState, Vec } from "./types.js";

/**
 * Drawable content in world coordinates.  The curve polyline is the
 * /sample payload verbatim: the renderer must not touch the numbers
 * beyond the affine world-to-canvas mapping.
 */
export interface Scene {
    curvePolyline: Vec[];
    controlPolygon: Vec[] | null;
    limitPolylines: Vec[][];
    limitDots: Vec[];
    selection: number | null;
    banner: string | null;
}

export function buildScene(state: StudioState): Scene {
    const limitPolylines: Vec[][] = [];
    const limitDots: Vec[] = [];
    if (state.overlays.regularControlCurve && state.limit) {
        for (const piece of state.limit.pieces) {
            if (piece.degenerate || piece.subset.length === 1) {
                limitDots.push(piece.points[0]);
            } else if (piece.samples && piece.samples.length > 1) {
                limitPolylines.push(piece.samples);
            } else {
                limitPolylines.push(piece.points);
            }
        }
    }
    return {
        curvePolyline: state.sample ? state.sample.points : [],
        controlPolygon: state.overlays.controlPolygon ? state.doc.points : null,
        limitPolylines,
        limitDots,
        selection: state.selection,
        banner: state.banner,
    };
}

/** Side panel data: the lifted points (i, lift(i)) with their upper hull. */
export interface LiftedPanel {
    points: Vec[];
    hull: Vec[];
}

/**
 * Upper convex hull of the lifted points, for display only (the authoritative
 * decomposition comes from the service).
 */
export function upperHull(points: Vec[]): Vec[] {
    const chain: Vec[] = [];
    for (const q of points) {
        while (chain.length > 1) {
            const a = chain[chain.length - 2];
            const b = chain[chain.length - 1];
            if ((b[0] - a[0]) * (q[1] - a[1]) - (q[0] - a[0]) * (b[1] - a[1]) >= 0) {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(q);
    }
    return chain;
}

export function buildLiftedPanel(state: StudioState): LiftedPanel | null {
    if (!state.overlays.liftedHullPanel) {
        return null;
    }
    const lifting = state.doc.lifting ?? state.doc.points.map(() => 0);
    const points = lifting.map((v, i) => [i, v]);
    return { points, hull: upperHull(points) };
}
