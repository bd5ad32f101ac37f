export class HttpApi {
    constructor(base = "") {
        this.base = base;
    }
    async getJson(path) {
        const resp = await fetch(this.base + path);
        if (!resp.ok) {
            const body = await resp.json().catch(() => ({ error: resp.statusText }));
            throw new Error(body.error ?? resp.statusText);
        }
        return resp.json();
    }
    getState() {
        return this.getJson("/api/state");
    }
    getAnalysis() {
        return this.getJson("/api/analysis");
    }
    async fire(transition) {
        const resp = await fetch(this.base + "/api/fire", {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ transition }),
        });
        const body = await resp.json();
        if (resp.ok) {
            return { ok: true, state: body };
        }
        return {
            ok: false,
            status: resp.status,
            error: body.error ?? "request failed",
            deficient: body.deficient ?? [],
        };
    }
    async post(path) {
        const resp = await fetch(this.base + path, { method: "POST" });
        if (!resp.ok) {
            const body = await resp.json().catch(() => ({ error: resp.statusText }));
            throw new Error(body.error ?? resp.statusText);
        }
        return resp.json();
    }
    undo() {
        return this.post("/api/undo");
    }
    reset() {
        return this.post("/api/reset");
    }
    async loadNet(text) {
        const resp = await fetch(this.base + "/api/net", { method: "POST", body: text });
        const body = await resp.json();
        if (resp.ok) {
            return { ok: true, state: body };
        }
        const where = body.line !== undefined ? ` (line ${body.line})` : "";
        return { ok: false, error: (body.error ?? "bad net description") + where };
    }
}
