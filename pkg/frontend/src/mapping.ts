import { Vec } from "./types.js";

/** Uniform-scale world-to-canvas transform with a y flip. */
export interface Mapping {
    scale: number;
    offsetX: number;
    offsetY: number;
}

export function fitView(points: Vec[], width: number, height: number, margin = 30): Mapping {
    if (points.length === 0) {
        return { scale: 1, offsetX: width / 2, offsetY: height / 2 };
    }
    let x0 = Infinity, x1 = -Infinity, y0 = Infinity, y1 = -Infinity;
    for (const q of points) {
        x0 = Math.min(x0, q[0]);
        x1 = Math.max(x1, q[0]);
        y0 = Math.min(y0, q[1]);
        y1 = Math.max(y1, q[1]);
    }
    const spanX = Math.max(x1 - x0, 1e-9);
    const spanY = Math.max(y1 - y0, 1e-9);
    const scale = Math.min((width - 2 * margin) / spanX, (height - 2 * margin) / spanY);
    return {
        scale,
        offsetX: (width - scale * (x0 + x1)) / 2,
        offsetY: (height + scale * (y0 + y1)) / 2,
    };
}

export function toCanvas(m: Mapping, q: Vec): [number, number] {
    return [m.offsetX + m.scale * q[0], m.offsetY - m.scale * q[1]];
}

export function toWorld(m: Mapping, x: number, y: number): Vec {
    return [(x - m.offsetX) / m.scale, (m.offsetY - y) / m.scale];
}
