import { ApiClient, ApiError } from "./api.js";
import { formatBreakdown } from "./cards.js";
import type { CardInfo, Phase, SessionSnapshot } from "./types.js";

export interface FlowState {
    phase: Phase;
    base: number;
    limit: number;
    sessionId: string | null;
    deck: CardInfo[];
    answers: boolean[];
    pending: number;
    /** Decoded number; only ever written from a server response. */
    outcome: number | null;
    /** Decode failure kind reported by the server (ConflictingAnswers, ...). */
    failure: string | null;
    /** Inline validation message for the setup screen. */
    setupError: string | null;
}

function freshState(): FlowState {
    return {
        phase: "setup",
        base: 2,
        limit: 60,
        sessionId: null,
        deck: [],
        answers: [],
        pending: 0,
        outcome: null,
        failure: null,
        setupError: null,
    };
}

/**
 * Session flow controller, DOM-free. The phase mirrors the server session
 * state exactly and the secret is never computed locally: every transition
 * and the revealed number come from API responses.
 */
export class GameFlow {
    state: FlowState = freshState();

    constructor(private readonly api: ApiClient) {}

    /** Deck size preview for the setup screen. */
    previewCards(base: number, limit: number): Promise<number> {
        return this.api.cardsRequired(base, limit);
    }

    /** Create a session; on 400/422 the phase stays setup with an inline message. */
    async start(base: number, limit: number): Promise<void> {
        this.state = freshState();
        this.state.base = base;
        this.state.limit = limit;
        try {
            const created = await this.api.createSession(base, limit);
            this.state.sessionId = created.id;
            this.state.deck = created.deck;
            this.state.pending = created.pending;
            this.state.phase = "answering";
        } catch (err) {
            if (err instanceof ApiError && (err.status === 400 || err.status === 422)) {
                this.state.setupError = `${err.kind}: ${err.detail}`;
                return;
            }
            throw err;
        }
    }

    currentCard(): CardInfo | null {
        if (this.state.phase !== "answering") {
            return null;
        }
        return this.state.deck[this.state.pending] ?? null;
    }

    /** Answer the pending card; a 409 (stale index) triggers a state resync. */
    async answer(yes: boolean): Promise<void> {
        if (this.state.phase !== "answering" || this.state.sessionId === null) {
            throw new Error(`cannot answer in phase ${this.state.phase}`);
        }
        try {
            const snapshot = await this.api.submitAnswer(
                this.state.sessionId,
                this.state.pending,
                yes
            );
            this.applySnapshot(snapshot);
        } catch (err) {
            if (err instanceof ApiError && err.status === 409) {
                await this.resync();
                return;
            }
            throw err;
        }
    }

    /** Overwrite local progress with the server's view of the session. */
    async resync(): Promise<void> {
        if (this.state.sessionId === null) {
            return;
        }
        this.applySnapshot(await this.api.getSession(this.state.sessionId));
    }

    /** The summation string for the reveal screen, or null before the reveal. */
    breakdown(): string | null {
        if (this.state.phase !== "revealed" || this.state.outcome === null) {
            return null;
        }
        return formatBreakdown(
            this.state.base,
            this.state.deck,
            this.state.answers,
            this.state.outcome
        );
    }

    reset(): void {
        this.state = freshState();
    }

    private applySnapshot(snapshot: SessionSnapshot): void {
        this.state.answers = snapshot.answers;
        this.state.pending = snapshot.pending;
        if (snapshot.state === "revealed") {
            this.state.phase = "revealed";
            this.state.outcome = snapshot.outcome ?? null;
        } else if (snapshot.state === "failed") {
            this.state.phase = "failed";
            this.state.failure = snapshot.error ?? null;
        } else {
            this.state.phase = "answering";
        }
    }
}
