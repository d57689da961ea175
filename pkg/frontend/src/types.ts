export type SessionState = "collecting" | "revealed" | "failed";

export type Phase = "setup" | "answering" | "revealed" | "failed";

export interface CardInfo {
    power: number;
    coefficient: number;
    members: number[];
}

export interface CreateSessionResponse {
    id: string;
    base: number;
    limit: number;
    state: SessionState;
    pending: number;
    deck: CardInfo[];
}

export interface SessionSnapshot {
    id: string;
    base: number;
    limit: number;
    card_count: number;
    cards: { power: number; coefficient: number }[];
    state: SessionState;
    pending: number;
    answers: boolean[];
    current_card: CardInfo | null;
    outcome?: number;
    error?: string;
}
