import { EngineClient } from "./api.js";
import { fitView, toWorld } from "./mapping.js";
import { paintLiftedPanel, paintScene } from "./render.js";
import { buildLiftedPanel, buildScene } from "./scene.js";
import { initialState, reduce, tToSlider, throttle } from "./state.js";
import { Action, CurveDocument, StudioState } from "./types.js";

const SAMPLE_COUNT = 400;
const LIMIT_SAMPLES = 100;
const DRAG_INTERVAL_MS = 34; // <= 30 requests per second while dragging

const DEFAULT_DOC: CurveDocument = {
    degree: 2,
    knots: [0, 0, 0, 0.25, 0.75, 1, 1, 1],
    points: [[0, 0], [1, 2], [2.5, 2.4], [4, 1.8], [5, 0]],
    weights: [3, 2, 3, 2, 5],
    lifting: [1, 2, 3, 2, 1],
    meta: { name: "quad-ridge" },
};

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) {
        throw new Error(`missing element #${id}`);
    }
    return node as T;
}

class Studio {
    private state: StudioState;
    private client: EngineClient;
    private canvas = el<HTMLCanvasElement>("scene");
    private panel = el<HTMLCanvasElement>("lifted-panel");
    private slider = el<HTMLInputElement>("t-slider");
    private tLabel = el<HTMLSpanElement>("t-value");
    private banner = el<HTMLDivElement>("banner");
    private fieldError = el<HTMLDivElement>("field-error");
    private docText = el<HTMLTextAreaElement>("doc-text");
    private weightInput = el<HTMLInputElement>("weight-input");
    private liftingInput = el<HTMLInputElement>("lifting-input");
    private selectionLabel = el<HTMLSpanElement>("selection-label");
    private dragging = false;
    private dragFetch: () => void;

    constructor(baseUrl: string) {
        this.client = new EngineClient(baseUrl);
        this.state = initialState(DEFAULT_DOC);
        this.dragFetch = throttle(() => {
            void this.refreshSample();
            void this.refreshLimit();
        }, DRAG_INTERVAL_MS);
        this.wire();
        this.docText.value = JSON.stringify(this.state.doc, null, 2);
        this.slider.value = String(Math.round(tToSlider(this.state.t) * 1000));
        void this.refreshAll();
    }

    private dispatch(action: Action): void {
        this.state = reduce(this.state, action);
        this.draw();
    }

    private async refreshSample(): Promise<void> {
        this.dispatch({ kind: "issue", stream: "sample" });
        const seq = this.state.issued.sample;
        try {
            const data = await this.client.sample(this.state.doc, this.state.t, SAMPLE_COUNT);
            this.dispatch({ kind: "sample-payload", seq, data });
        } catch (err) {
            this.dispatch({ kind: "fetch-failed", message: String(err) });
        }
    }

    private async refreshLimit(): Promise<void> {
        if (!this.state.doc.lifting) {
            return;
        }
        this.dispatch({ kind: "issue", stream: "limit" });
        const seq = this.state.issued.limit;
        try {
            const data = await this.client.limit(this.state.doc, LIMIT_SAMPLES);
            this.dispatch({ kind: "limit-payload", seq, data });
        } catch (err) {
            this.dispatch({ kind: "fetch-failed", message: String(err) });
        }
    }

    private async refreshAll(): Promise<void> {
        const validation = await this.client.validate(this.state.doc).catch((err) => {
            this.dispatch({ kind: "fetch-failed", message: String(err) });
            return null;
        });
        if (validation && !validation.valid) {
            const first = validation.diagnostics[0];
            this.fieldError.textContent = first ? `${first.code}: ${first.message}` : "invalid document";
            return;
        }
        await Promise.all([this.refreshSample(), this.refreshLimit()]);
    }

    private pickControlPoint(x: number, y: number): number | null {
        const mapping = this.mapping();
        const world = toWorld(mapping, x, y);
        let best = -1;
        let bestDist = Infinity;
        this.state.doc.points.forEach((q, i) => {
            const d = Math.hypot(q[0] - world[0], q[1] - world[1]);
            if (d < bestDist) {
                bestDist = d;
                best = i;
            }
        });
        return bestDist * mapping.scale <= 12 ? best : null;
    }

    private mapping() {
        const everything = [
            ...this.state.doc.points,
            ...(this.state.sample ? this.state.sample.points : []),
        ];
        return fitView(everything, this.canvas.width, this.canvas.height);
    }

    private wire(): void {
        this.slider.addEventListener("input", () => {
            this.dispatch({ kind: "move-slider", position: Number(this.slider.value) / 1000 });
            void this.refreshSample();
        });
        for (const overlay of ["controlPolygon", "liftedHullPanel", "regularControlCurve"] as const) {
            el<HTMLInputElement>(`overlay-${overlay}`).addEventListener("change", () => {
                this.dispatch({ kind: "toggle-overlay", overlay });
            });
        }
        this.canvas.addEventListener("mousedown", (ev) => {
            const rect = this.canvas.getBoundingClientRect();
            const hit = this.pickControlPoint(ev.clientX - rect.left, ev.clientY - rect.top);
            this.dispatch({ kind: "select", index: hit });
            this.dragging = hit !== null;
            this.syncSelectionInputs();
        });
        this.canvas.addEventListener("mousemove", (ev) => {
            if (!this.dragging || this.state.selection === null) {
                return;
            }
            const rect = this.canvas.getBoundingClientRect();
            const world = toWorld(this.mapping(), ev.clientX - rect.left, ev.clientY - rect.top);
            this.dispatch({ kind: "drag-point", index: this.state.selection, position: world });
            this.docText.value = JSON.stringify(this.state.doc, null, 2);
            this.dragFetch();
        });
        window.addEventListener("mouseup", () => {
            this.dragging = false;
        });
        this.weightInput.addEventListener("change", () => {
            if (this.state.selection === null) {
                return;
            }
            this.dispatch({
                kind: "edit-weight",
                index: this.state.selection,
                value: Number(this.weightInput.value),
            });
            if (!this.state.fieldError) {
                this.docText.value = JSON.stringify(this.state.doc, null, 2);
                void this.refreshAll();
            }
        });
        this.liftingInput.addEventListener("change", () => {
            if (this.state.selection === null) {
                return;
            }
            this.dispatch({
                kind: "edit-lifting",
                index: this.state.selection,
                value: Number(this.liftingInput.value),
            });
            if (!this.state.fieldError) {
                this.docText.value = JSON.stringify(this.state.doc, null, 2);
                void this.refreshAll();
            }
        });
        el<HTMLButtonElement>("load-doc").addEventListener("click", () => {
            try {
                const doc = JSON.parse(this.docText.value) as CurveDocument;
                this.dispatch({ kind: "load-document", doc });
                void this.refreshAll();
            } catch (err) {
                this.fieldError.textContent = `document is not valid JSON: ${err}`;
            }
        });
        el<HTMLButtonElement>("save-doc").addEventListener("click", () => {
            const blob = new Blob([this.docText.value], { type: "application/json" });
            const link = document.createElement("a");
            link.href = URL.createObjectURL(blob);
            link.download = "curve.json";
            link.click();
            URL.revokeObjectURL(link.href);
        });
    }

    private syncSelectionInputs(): void {
        const i = this.state.selection;
        if (i === null) {
            this.selectionLabel.textContent = "none";
            return;
        }
        this.selectionLabel.textContent = `P${i}`;
        this.weightInput.value = String(this.state.doc.weights[i]);
        const lifting = this.state.doc.lifting ?? this.state.doc.points.map(() => 0);
        this.liftingInput.value = String(lifting[i]);
    }

    private draw(): void {
        this.tLabel.textContent = this.state.t.toFixed(this.state.t < 10 ? 2 : 0);
        this.banner.textContent = this.state.banner ?? "";
        this.banner.style.display = this.state.banner ? "block" : "none";
        this.fieldError.textContent = this.state.fieldError ?? "";
        const scene = buildScene(this.state);
        const ctx = this.canvas.getContext("2d");
        if (ctx) {
            paintScene(ctx, scene, this.mapping(), this.canvas.width, this.canvas.height);
        }
        const panelData = buildLiftedPanel(this.state);
        const panelCtx = this.panel.getContext("2d");
        if (panelCtx) {
            if (panelData) {
                const m = fitView(panelData.points, this.panel.width, this.panel.height, 20);
                paintLiftedPanel(panelCtx, panelData, m, this.panel.width, this.panel.height);
            } else {
                panelCtx.clearRect(0, 0, this.panel.width, this.panel.height);
            }
        }
    }
}

const params = new URLSearchParams(window.location.search);
new Studio(params.get("backend") ?? "http://127.0.0.1:7878");
