import { Action, CurveDocument, StudioState } from "./types.js";

export const T_MIN = 1;
export const T_MAX = 1e4;

/** Slider position in [0, 1] -> t, logarithmic over [1, 1e4]. */
export function sliderToT(position: number): number {
    const s = Math.min(1, Math.max(0, position));
    return Math.pow(10, s * Math.log10(T_MAX));
}

export function tToSlider(t: number): number {
    const clamped = Math.min(T_MAX, Math.max(T_MIN, t));
    return Math.log10(clamped) / Math.log10(T_MAX);
}

export function initialState(doc: CurveDocument): StudioState {
    return {
        doc,
        t: 1,
        overlays: { controlPolygon: true, liftedHullPanel: true, regularControlCurve: true },
        selection: null,
        issued: { sample: 0, limit: 0 },
        sample: null,
        limit: null,
        fieldError: null,
        banner: null,
    };
}

function withDoc(state: StudioState, doc: CurveDocument): StudioState {
    return { ...state, doc, fieldError: null };
}

/**
 * Pure state transition.  Numeric edits are validated here so an invalid
 * entry leaves the document untouched and surfaces an inline field error;
 * payload actions are dropped unless they carry the latest issued sequence.
 */
export function reduce(state: StudioState, action: Action): StudioState {
    switch (action.kind) {
        case "drag-point": {
            const points = state.doc.points.map((q, i) =>
                i === action.index ? action.position.slice() : q,
            );
            return withDoc(state, { ...state.doc, points });
        }
        case "edit-weight": {
            if (!Number.isFinite(action.value) || action.value <= 0) {
                return { ...state, fieldError: `weight ${action.index} must be a positive number` };
            }
            const weights = state.doc.weights.map((w, i) => (i === action.index ? action.value : w));
            return withDoc(state, { ...state.doc, weights });
        }
        case "edit-lifting": {
            if (!Number.isFinite(action.value)) {
                return { ...state, fieldError: `lifting ${action.index} must be a finite number` };
            }
            const base = state.doc.lifting ?? state.doc.points.map(() => 0);
            const lifting = base.map((v, i) => (i === action.index ? action.value : v));
            return withDoc(state, { ...state.doc, lifting });
        }
        case "move-slider":
            return { ...state, t: sliderToT(action.position) };
        case "toggle-overlay":
            return {
                ...state,
                overlays: { ...state.overlays, [action.overlay]: !state.overlays[action.overlay] },
            };
        case "select":
            return { ...state, selection: action.index };
        case "load-document":
            return { ...withDoc(state, action.doc), selection: null, sample: null, limit: null };
        case "issue":
            return { ...state, issued: { ...state.issued, [action.stream]: state.issued[action.stream] + 1 } };
        case "sample-payload":
            if (action.seq !== state.issued.sample) {
                return state; // superseded by a newer request
            }
            return { ...state, sample: action.data, banner: null };
        case "limit-payload":
            if (action.seq !== state.issued.limit) {
                return state;
            }
            return { ...state, limit: action.data, banner: null };
        case "fetch-failed":
            return { ...state, banner: action.message };
    }
}

/** Rate limiter for drag updates: at most one call per intervalMs. */
export function throttle<A extends unknown[]>(
    fn: (...args: A) => void,
    intervalMs: number,
    now: () => number = () => Date.now(),
): (...args: A) => void {
    let last = -Infinity;
    let queued: A | null = null;
    let timer: ReturnType<typeof setTimeout> | null = null;
    const fire = (args: A) => {
        last = now();
        fn(...args);
    };
    return (...args: A) => {
        const wait = last + intervalMs - now();
        if (wait <= 0) {
            fire(args);
            return;
        }
        queued = args;
        if (timer === null) {
            timer = setTimeout(() => {
                timer = null;
                if (queued) {
                    const next = queued;
                    queued = null;
                    fire(next);
                }
            }, wait);
        }
    };
}
