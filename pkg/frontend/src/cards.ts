const SUPERSCRIPTS: Record<string, string> = {
    "0": "⁰",
    "1": "¹",
    "2": "²",
    "3": "³",
    "4": "⁴",
    "5": "⁵",
    "6": "⁶",
    "7": "⁷",
    "8": "⁸",
    "9": "⁹",
};

function superscript(n: number): string {
    return String(n)
        .split("")
        .map((ch) => SUPERSCRIPTS[ch] ?? ch)
        .join("");
}

/** Card header like 3² or 2·3² (the coefficient is omitted when it is 1). */
export function cardTitle(base: number, power: number, coefficient: number): string {
    const powerPart = `${base}${superscript(power)}`;
    return coefficient === 1 ? powerPart : `${coefficient}·${powerPart}`;
}

/**
 * One term of the reveal sum. Binary sums read as bare power values
 * (32 + 8 + 4 + 1); other bases keep the digit visible even when it is 1
 * (2·9 + 1·3 + 2·1).
 */
export function formatTerm(base: number, power: number, coefficient: number): string {
    const value = base ** power;
    return base === 2 ? String(value) : `${coefficient}·${value}`;
}

/**
 * The summation breakdown shown on the reveal screen, rendered purely from
 * deck metadata plus the yes-set. The revealed number itself always comes
 * from the server; this string is presentation only.
 */
export function formatBreakdown(
    base: number,
    deck: { power: number; coefficient: number }[],
    answers: boolean[],
    outcome: number
): string {
    const terms = deck
        .filter((_, i) => answers[i])
        .map((card) => formatTerm(base, card.power, card.coefficient));
    return `${terms.join(" + ")} = ${outcome}`;
}
