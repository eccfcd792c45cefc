export type Vec = number[]; // [x, y] or [x, y, z]; the studio draws x/y

export interface CurveDocument {
    degree: number;
    knots: number[];
    points: Vec[];
    weights: number[];
    lifting?: number[];
    meta?: Record<string, unknown>;
}

export interface Diagnostic {
    code: string;
    message: string;
    field: string | null;
}

export interface ValidatePayload {
    valid: boolean;
    diagnostics: Diagnostic[];
    degree?: number;
    pieces?: number;
}

export interface SamplePayload {
    t: number;
    count: number;
    points: Vec[];
}

export interface LimitPiece {
    piece: number;
    subset: number[];
    weights: number[];
    points: Vec[];
    coeffs: number[];
    degenerate: boolean;
    samples?: Vec[];
}

export interface LimitPayload {
    pieces: LimitPiece[];
}

export interface Overlays {
    controlPolygon: boolean;
    liftedHullPanel: boolean;
    regularControlCurve: boolean;
}

/** Everything the view needs; mutated only through reduce(). */
export interface StudioState {
    doc: CurveDocument;
    t: number;
    overlays: Overlays;
    selection: number | null;
    /** latest issued request sequence per stream; stale responses are dropped */
    issued: { sample: number; limit: number };
    sample: SamplePayload | null;
    limit: LimitPayload | null;
    fieldError: string | null;
    banner: string | null;
}

export type Action =
    | { kind: "drag-point"; index: number; position: Vec }
    | { kind: "edit-weight"; index: number; value: number }
    | { kind: "edit-lifting"; index: number; value: number }
    | { kind: "move-slider"; position: number }
    | { kind: "toggle-overlay"; overlay: keyof Overlays }
    | { kind: "select"; index: number | null }
    | { kind: "load-document"; doc: CurveDocument }
    | { kind: "issue"; stream: "sample" | "limit" }
    | { kind: "sample-payload"; seq: number; data: SamplePayload }
    | { kind: "limit-payload"; seq: number; data: LimitPayload }
    | { kind: "fetch-failed"; message: string };
