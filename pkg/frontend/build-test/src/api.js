/** Thin typed client for /api/v1. The transport is injectable so component
 * tests can intercept it; the hint call keeps the raw response text so the
 * overlay can show the server's numbers byte for byte. */
export class ApiError extends Error {
    code;
    status;
    constructor(code, message, status) {
        super(message);
        this.code = code;
        this.status = status;
    }
}
async function raise(response) {
    let code = "http_error";
    let message = `${response.status} ${response.statusText}`;
    try {
        const body = (await response.json());
        if (body.error) {
            code = body.error.code;
            message = body.error.message;
        }
    }
    catch {
        // non-JSON error body: keep the HTTP status text
    }
    throw new ApiError(code, message, response.status);
}
export class ApiClient {
    base;
    fetchImpl;
    constructor(fetchImpl, base = "") {
        this.base = base;
        this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
    }
    async getJson(path) {
        const response = await this.fetchImpl(this.base + path);
        if (!response.ok)
            await raise(response);
        return (await response.json());
    }
    async postJson(path, body) {
        const response = await this.fetchImpl(this.base + path, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(body),
        });
        if (!response.ok)
            await raise(response);
        return (await response.json());
    }
    solve(spec) {
        return this.postJson("/api/v1/solve", spec);
    }
    sweep(params) {
        const query = new URLSearchParams();
        query.set("game", params.game);
        if (params.game === "nim1") {
            query.set("k", String(params.k));
        }
        else {
            query.set("rows", String(params.rows));
            query.set("cols", String(params.cols));
            query.set("variant", params.variant);
        }
        query.set("points", String(params.points ?? 101));
        return this.getJson(`/api/v1/sweep?${query.toString()}`);
    }
    createSession(spec, seed, humanFirst) {
        return this.postJson("/api/v1/sessions", {
            spec,
            seed,
            human_first: humanFirst,
        });
    }
    getSession(id) {
        return this.getJson(`/api/v1/sessions/${id}`);
    }
    postMove(id, sent) {
        return this.postJson(`/api/v1/sessions/${id}/moves`, { sent });
    }
    /** Returns the parsed hint plus the raw bytes it was parsed from. */
    async hint(id) {
        const response = await this.fetchImpl(`${this.base}/api/v1/sessions/${id}/hint`);
        if (!response.ok)
            await raise(response);
        const raw = await response.text();
        return { raw, data: JSON.parse(raw) };
    }
}
