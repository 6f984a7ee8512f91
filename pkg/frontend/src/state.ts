import type { DetoxRequest, DetoxResponse, Language, Verdict } from "./types.js";

export interface HistoryEntry {
  request: DetoxRequest;
  response: DetoxResponse;
  verdict: Verdict | null;
  feedbackId: number | null;
  correctedText: string | null;
}

export interface SessionState {
  language: Language;
  draft: string;
  inFlight: boolean;
  lastError: string | null;
  current: HistoryEntry | null;
  history: HistoryEntry[];
}

export function initialState(): SessionState {
  return {
    language: "xh",
    draft: "",
    inFlight: false,
    lastError: null,
    current: null,
    history: [],
  };
}

/** Submit is available for a non-empty draft while no request is running. */
export function canSubmit(state: SessionState): boolean {
  return !state.inFlight && state.draft.trim().length > 0;
}

/**
 * Feedback gate: there must be an unreviewed result on screen, and a
 * bad_rewrite verdict carries no meaning without the corrected sentence.
 * Once an entry holds a stored id the gate closes, which is what disables
 * double submission in the UI.
 */
export function canFileFeedback(
  entry: HistoryEntry | null,
  verdict: Verdict,
  correctedText: string,
): boolean {
  if (entry === null || entry.feedbackId !== null) {
    return false;
  }
  if (verdict === "bad_rewrite" && correctedText.trim().length === 0) {
    return false;
  }
  return true;
}

/** Append the finished round trip to the session history and focus it. */
export function recordResult(
  state: SessionState,
  request: DetoxRequest,
  response: DetoxResponse,
): HistoryEntry {
  const entry: HistoryEntry = {
    request,
    response,
    verdict: null,
    feedbackId: null,
    correctedText: null,
  };
  state.history.push(entry);
  state.current = entry;
  state.lastError = null;
  return entry;
}

export function markReviewed(
  entry: HistoryEntry,
  verdict: Verdict,
  feedbackId: number,
  correctedText: string | null,
): void {
  entry.verdict = verdict;
  entry.feedbackId = feedbackId;
  entry.correctedText = correctedText;
}
