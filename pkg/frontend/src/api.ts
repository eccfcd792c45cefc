import { CurveDocument, LimitPayload, SamplePayload, ValidatePayload } from "./types.js";

/**
 * Thin client for the curve service.  All math happens server-side; this
 * class only ships documents and query parameters.
 */
export class EngineClient {
    constructor(private baseUrl: string, private fetchFn: typeof fetch = fetch) {}

    private async post<T>(path: string, body: unknown): Promise<T> {
        const resp = await this.fetchFn(this.baseUrl + path, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
        });
        const payload = await resp.json();
        if (!resp.ok) {
            const code = (payload && payload.code) || resp.status;
            const message = (payload && payload.message) || "request failed";
            throw new Error(`${code}: ${message}`);
        }
        return payload as T;
    }

    validate(doc: CurveDocument): Promise<ValidatePayload> {
        return this.post("/validate", doc);
    }

    sample(doc: CurveDocument, t: number, count: number): Promise<SamplePayload> {
        return this.post(`/sample?t=${encodeURIComponent(t)}&count=${count}`, doc);
    }

    limit(doc: CurveDocument, samples: number): Promise<LimitPayload> {
        return this.post(`/limit?samples=${samples}`, doc);
    }

    async health(): Promise<boolean> {
        try {
            const resp = await this.fetchFn(this.baseUrl + "/health");
            return resp.ok;
        } catch {
            return false;
        }
    }
}
