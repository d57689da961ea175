import { ApiClient } from "./api.js";
import { cardTitle } from "./cards.js";
import { GameFlow } from "./flow.js";

const flow = new GameFlow(new ApiClient(""));
const root = document.getElementById("app") as HTMLElement;

function el<K extends keyof HTMLElementTagNameMap>(
    tag: K,
    className?: string,
    text?: string
): HTMLElementTagNameMap[K] {
    const node = document.createElement(tag);
    if (className) {
        node.className = className;
    }
    if (text !== undefined) {
        node.textContent = text;
    }
    return node;
}

function render(): void {
    root.replaceChildren();
    switch (flow.state.phase) {
        case "setup":
            renderSetup();
            break;
        case "answering":
            renderCard();
            break;
        case "revealed":
        case "failed":
            renderReveal();
            break;
    }
}

function renderSetup(): void {
    const panel = el("div", "panel");
    panel.append(el("h1", "", "Guess my number"));
    panel.append(
        el(
            "p",
            "hint",
            "Think of a number, answer yes or no for each card, and the app will name it."
        )
    );

    const form = el("div", "setup-form");

    const baseField = el("label", "field", "base ");
    const baseSelect = el("select");
    for (let b = 2; b <= 10; b++) {
        const option = el("option", "", String(b));
        option.value = String(b);
        baseSelect.append(option);
    }
    baseSelect.value = String(flow.state.base);
    baseField.append(baseSelect);

    const limitField = el("label", "field", "guess up to ");
    const limitInput = el("input");
    limitInput.type = "number";
    limitInput.min = "1";
    limitInput.value = String(flow.state.limit);
    limitField.append(limitInput);

    const preview = el("p", "preview");
    const error = el("p", "error");

    async function updatePreview(): Promise<void> {
        const base = Number(baseSelect.value);
        const limit = Number(limitInput.value);
        if (!Number.isInteger(limit) || limit < 1) {
            preview.textContent = "";
            return;
        }
        try {
            const cards = await flow.previewCards(base, limit);
            preview.textContent = `${cards} card${cards === 1 ? "" : "s"}`;
        } catch {
            preview.textContent = "";
        }
    }

    baseSelect.addEventListener("change", () => void updatePreview());
    limitInput.addEventListener("input", () => void updatePreview());

    const start = el("button", "primary", "Start");
    start.addEventListener("click", async () => {
        error.textContent = "";
        await flow.start(Number(baseSelect.value), Number(limitInput.value));
        if (flow.state.setupError) {
            error.textContent = flow.state.setupError;
            return;
        }
        render();
    });

    form.append(baseField, limitField, start);
    panel.append(form, preview, error);
    root.append(panel);
    void updatePreview();
}

function renderCard(): void {
    const card = flow.currentCard();
    if (card === null) {
        return;
    }
    const panel = el("div", "panel");
    panel.append(
        el(
            "p",
            "progress",
            `card ${flow.state.pending + 1} of ${flow.state.deck.length}`
        )
    );
    panel.append(
        el("h2", "", cardTitle(flow.state.base, card.power, card.coefficient))
    );

    const grid = el("div", "member-grid");
    for (const member of card.members) {
        grid.append(el("span", "member", String(member)));
    }
    if (card.members.length === 0) {
        grid.append(el("span", "hint", "(no numbers this small)"));
    }
    panel.append(grid);
    panel.append(el("p", "", "Is your number on this card?"));

    const buttons = el("div", "buttons");
    for (const [label, value] of [
        ["Yes", true],
        ["No", false],
    ] as const) {
        const button = el("button", value ? "primary" : "secondary", label);
        button.addEventListener("click", async () => {
            await flow.answer(value);
            render();
        });
        buttons.append(button);
    }
    panel.append(buttons);
    root.append(panel);
}

function renderReveal(): void {
    const panel = el("div", "panel");
    if (flow.state.phase === "revealed") {
        panel.append(el("p", "hint", "your number is"));
        panel.append(el("h1", "outcome", String(flow.state.outcome)));
        const breakdown = flow.breakdown();
        if (breakdown !== null) {
            panel.append(el("p", "breakdown", breakdown));
        }
    } else {
        panel.append(el("h2", "", "Those answers do not match any number"));
        const explanations: Record<string, string> = {
            ConflictingAnswers: "yes was answered for two cards of the same power",
            EmptySelection: "no cards selected, but the range starts at 1",
            OutOfRange: "the answers add up to a number above the limit",
        };
        const kind = flow.state.failure ?? "inconsistent answers";
        panel.append(el("p", "error", `${kind}: ${explanations[kind] ?? ""}`));
        panel.append(
            el("p", "hint", `answers given: ${flow.state.answers.map((a) => (a ? "yes" : "no")).join(", ")}`)
        );
    }
    const again = el("button", "primary", "Play again");
    again.addEventListener("click", () => {
        flow.reset();
        render();
    });
    panel.append(again);
    root.append(panel);
}

render();
