import { Mapping, toCanvas } from "./mapping.js";
import { LiftedPanel, Scene } from "./scene.js";
import { Vec } from "./types.js";

const CURVE_COLOR = "#1f6fb2";
const LIMIT_COLOR = "#c0392b";
const POLYGON_COLOR = "#9aa0a6";

function strokePolyline(ctx: CanvasRenderingContext2D, m: Mapping, pts: Vec[]): void {
    if (pts.length < 2) {
        return;
    }
    ctx.beginPath();
    const [x0, y0] = toCanvas(m, pts[0]);
    ctx.moveTo(x0, y0);
    for (let i = 1; i < pts.length; i++) {
        const [x, y] = toCanvas(m, pts[i]);
        ctx.lineTo(x, y);
    }
    ctx.stroke();
}

function dot(ctx: CanvasRenderingContext2D, m: Mapping, q: Vec, r: number, fill: string): void {
    const [x, y] = toCanvas(m, q);
    ctx.beginPath();
    ctx.arc(x, y, r, 0, 2 * Math.PI);
    ctx.fillStyle = fill;
    ctx.fill();
}

export function paintScene(
    ctx: CanvasRenderingContext2D,
    scene: Scene,
    m: Mapping,
    width: number,
    height: number,
): void {
    ctx.clearRect(0, 0, width, height);
    if (scene.controlPolygon) {
        ctx.strokeStyle = POLYGON_COLOR;
        ctx.lineWidth = 1;
        ctx.setLineDash([5, 4]);
        strokePolyline(ctx, m, scene.controlPolygon);
        ctx.setLineDash([]);
        scene.controlPolygon.forEach((q, i) => {
            dot(ctx, m, q, i === scene.selection ? 6 : 4, i === scene.selection ? "#e67e22" : POLYGON_COLOR);
        });
    }
    ctx.strokeStyle = LIMIT_COLOR;
    ctx.lineWidth = 1.5;
    ctx.setLineDash([7, 4]);
    for (const poly of scene.limitPolylines) {
        strokePolyline(ctx, m, poly);
    }
    ctx.setLineDash([]);
    for (const q of scene.limitDots) {
        dot(ctx, m, q, 4, LIMIT_COLOR);
    }
    ctx.strokeStyle = CURVE_COLOR;
    ctx.lineWidth = 2;
    strokePolyline(ctx, m, scene.curvePolyline);
}

export function paintLiftedPanel(
    ctx: CanvasRenderingContext2D,
    panel: LiftedPanel,
    m: Mapping,
    width: number,
    height: number,
): void {
    ctx.clearRect(0, 0, width, height);
    ctx.strokeStyle = "#1e8449";
    ctx.lineWidth = 1.5;
    strokePolyline(ctx, m, panel.hull);
    for (const q of panel.points) {
        dot(ctx, m, q, 4, "#333333");
    }
}
