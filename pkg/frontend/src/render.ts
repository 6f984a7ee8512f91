import type { HistoryEntry, SessionState } from "./state.js";
import type { TokenContribution } from "./types.js";
import { canFileFeedback, canSubmit } from "./state.js";
import type { Verdict } from "./types.js";

// All user text goes through textContent, never innerHTML, so sentences
// containing markup render as typed and diacritics stay untouched.

export interface ResultRefs {
  panel: HTMLElement;
  badge: HTMLElement;
  probability: HTMLElement;
  method: HTMLElement;
  output: HTMLElement;
  swaps: HTMLElement;
  bars: HTMLElement;
}

export interface FeedbackRefs {
  verdict: HTMLSelectElement;
  correctedRow: HTMLElement;
  corrected: HTMLTextAreaElement;
  button: HTMLButtonElement;
  status: HTMLElement;
}

export function renderSubmit(button: HTMLButtonElement, state: SessionState): void {
  button.disabled = !canSubmit(state);
  button.textContent = state.inFlight ? "Checking..." : "Check sentence";
}

export function renderError(el: HTMLElement, message: string | null): void {
  el.textContent = message ?? "";
  el.hidden = message === null;
}

export function renderBars(container: HTMLElement, contributions: TokenContribution[]): void {
  container.replaceChildren();
  if (contributions.length === 0) {
    const note = container.ownerDocument.createElement("p");
    note.className = "bars-empty";
    note.textContent = "No scored tokens in this sentence.";
    container.append(note);
    return;
  }
  const top = Math.max(...contributions.map((c) => Math.abs(c.contribution)));
  for (const item of contributions) {
    const doc = container.ownerDocument;
    const row = doc.createElement("div");
    row.className = "bar-row";

    const term = doc.createElement("span");
    term.className = "bar-term";
    term.textContent = item.term;

    const track = doc.createElement("span");
    track.className = "bar-track";
    const fill = doc.createElement("span");
    // The service's signed contribution is used as-is; the client only
    // scales it against the largest magnitude for display.
    fill.className = item.contribution > 0 ? "bar-fill toxic" : "bar-fill clean";
    fill.style.width = `${(Math.abs(item.contribution) / top) * 100}%`;
    fill.dataset.contribution = String(item.contribution);
    track.append(fill);

    const value = doc.createElement("span");
    value.className = "bar-value";
    value.textContent = item.contribution.toFixed(3);

    row.append(term, track, value);
    container.append(row);
  }
}

export function renderResult(refs: ResultRefs, entry: HistoryEntry | null): void {
  if (entry === null) {
    refs.panel.hidden = true;
    return;
  }
  refs.panel.hidden = false;
  const { response } = entry;
  refs.badge.textContent = response.label;
  refs.badge.className = response.label === "TOXIC" ? "badge toxic" : "badge clean";
  refs.probability.textContent = `p(toxic) = ${response.probability.toFixed(3)}`;
  refs.method.textContent = response.method;
  refs.output.textContent = response.output_text;
  if (response.replaced_tokens.length > 0) {
    refs.swaps.textContent = response.replaced_tokens
      .map(([from, to]) => `${from} → ${to}`)
      .join(", ");
    refs.swaps.hidden = false;
  } else {
    refs.swaps.textContent = "";
    refs.swaps.hidden = true;
  }
  renderBars(refs.bars, response.token_contributions);
}

export function renderFeedback(
  refs: FeedbackRefs,
  entry: HistoryEntry | null,
  pending: boolean,
): void {
  const verdict = refs.verdict.value as Verdict;
  refs.correctedRow.hidden = verdict !== "bad_rewrite";
  refs.button.disabled =
    pending || !canFileFeedback(entry, verdict, refs.corrected.value);
  if (entry === null) {
    refs.status.textContent = "";
  } else if (entry.feedbackId !== null) {
    refs.status.textContent = `stored as #${entry.feedbackId} (${entry.verdict})`;
  } else {
    refs.status.textContent = "";
  }
}

export function renderHistory(list: HTMLElement, history: HistoryEntry[]): void {
  list.replaceChildren();
  for (const entry of history) {
    const doc = list.ownerDocument;
    const item = doc.createElement("li");

    const head = doc.createElement("span");
    head.className =
      entry.response.label === "TOXIC" ? "history-label toxic" : "history-label clean";
    head.textContent = `[${entry.request.language}] ${entry.response.label}`;

    const input = doc.createElement("span");
    input.className = "history-input";
    input.textContent = entry.request.text;

    const output = doc.createElement("span");
    output.className = "history-output";
    output.textContent = entry.response.output_text;

    item.append(head, input, output);
    if (entry.feedbackId !== null) {
      const mark = doc.createElement("span");
      mark.className = "history-reviewed";
      mark.textContent =
        entry.correctedText !== null
          ? `reviewed: ${entry.verdict} #${entry.feedbackId}, correction: ${entry.correctedText}`
          : `reviewed: ${entry.verdict} #${entry.feedbackId}`;
      item.append(mark);
    }
    list.append(item);
  }
}
