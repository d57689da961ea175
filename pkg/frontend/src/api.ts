import type { CreateSessionResponse, SessionSnapshot } from "./types.js";

export class ApiError extends Error {
    constructor(
        public readonly status: number,
        public readonly kind: string,
        public readonly detail: string
    ) {
        super(`${kind}: ${detail}`);
        this.name = "ApiError";
    }
}

async function parseBody(response: Response): Promise<Record<string, unknown>> {
    try {
        return (await response.json()) as Record<string, unknown>;
    } catch {
        return {};
    }
}

/** Thin typed wrapper over the JSON API; every value comes back as an exact integer. */
export class ApiClient {
    constructor(private readonly baseUrl: string = "") {}

    private async request<T>(path: string, init?: RequestInit): Promise<T> {
        const response = await fetch(this.baseUrl + path, init);
        const body = await parseBody(response);
        if (!response.ok) {
            throw new ApiError(
                response.status,
                typeof body.error === "string" ? body.error : "HttpError",
                typeof body.detail === "string" ? body.detail : response.statusText
            );
        }
        return body as T;
    }

    private post<T>(path: string, payload: unknown): Promise<T> {
        return this.request<T>(path, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(payload),
        });
    }

    /** Deck size for a prospective game, for the live preview on the setup screen. */
    async cardsRequired(base: number, limit: number): Promise<number> {
        const body = await this.request<{ cards_required: number }>(
            `/api/formulas?base=${base}&n=${limit}`
        );
        return body.cards_required;
    }

    createSession(base: number, limit: number): Promise<CreateSessionResponse> {
        return this.post<CreateSessionResponse>("/api/sessions", { base, limit });
    }

    submitAnswer(sessionId: string, index: number, answer: boolean): Promise<SessionSnapshot> {
        return this.post<SessionSnapshot>(`/api/sessions/${sessionId}/answers`, {
            index,
            answer,
        });
    }

    getSession(sessionId: string): Promise<SessionSnapshot> {
        return this.request<SessionSnapshot>(`/api/sessions/${sessionId}`);
    }
}
