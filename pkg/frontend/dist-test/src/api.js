// Typed client for the play server's JSON API.  The client never computes
// game legality itself; every transition comes from the server.
export class ApiError extends Error {
    constructor(status, code, message) {
        super(message);
        this.status = status;
        this.code = code;
    }
}
export class GameClient {
    constructor(baseUrl = "") {
        this.baseUrl = baseUrl;
    }
    createGame(body) {
        return this.request("POST", "/api/games", body);
    }
    getGame(id) {
        return this.request("GET", `/api/games/${id}`);
    }
    move(id, action) {
        return this.request("POST", `/api/games/${id}/move`, action);
    }
    hint(id) {
        return this.request("GET", `/api/games/${id}/hint`);
    }
    abandon(id) {
        return this.request("DELETE", `/api/games/${id}`);
    }
    async request(method, path, body) {
        const response = await fetch(this.baseUrl + path, {
            method,
            headers: { "Content-Type": "application/json" },
            body: body === undefined ? undefined : JSON.stringify(body),
        });
        const doc = await response.json();
        if (!response.ok) {
            throw new ApiError(response.status, typeof doc?.code === "string" ? doc.code : "error", typeof doc?.message === "string" ? doc.message : response.statusText);
        }
        return doc;
    }
}
