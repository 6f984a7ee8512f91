import { describe, expect, it } from "vitest";

import {
  canFileFeedback,
  canSubmit,
  initialState,
  markReviewed,
  recordResult,
} from "../src/state.js";
import type { DetoxResponse } from "../src/types.js";

const RESPONSE: DetoxResponse = {
  label: "TOXIC",
  probability: 0.91,
  output_text: "o se daradara",
  method: "corpus_lookup",
  replaced_tokens: [],
  token_contributions: [],
};

describe("canSubmit", () => {
  it("rejects an empty draft", () => {
    const state = initialState();
    expect(canSubmit(state)).toBe(false);
  });

  it("rejects a whitespace-only draft", () => {
    const state = initialState();
    state.draft = "  \n\t ";
    expect(canSubmit(state)).toBe(false);
  });

  it("rejects while a request is in flight", () => {
    const state = initialState();
    state.draft = "o ya were";
    state.inFlight = true;
    expect(canSubmit(state)).toBe(false);
  });

  it("accepts a non-empty draft at rest", () => {
    const state = initialState();
    state.draft = "o ya were";
    expect(canSubmit(state)).toBe(true);
  });
});

describe("recordResult", () => {
  it("appends to history and sets the current entry", () => {
    const state = initialState();
    const first = recordResult(state, { text: "a", language: "yo" }, RESPONSE);
    const second = recordResult(state, { text: "b", language: "xh" }, RESPONSE);
    expect(state.history).toHaveLength(2);
    expect(state.history[0]).toBe(first);
    expect(state.history[1]).toBe(second);
    expect(state.current).toBe(second);
  });

  it("never removes earlier entries", () => {
    const state = initialState();
    const first = recordResult(state, { text: "a", language: "yo" }, RESPONSE);
    recordResult(state, { text: "b", language: "yo" }, RESPONSE);
    markReviewed(state.history[1]!, "accept", 7, null);
    expect(state.history[0]).toBe(first);
    expect(first.feedbackId).toBeNull();
  });

  it("clears a stale error", () => {
    const state = initialState();
    state.lastError = "boom";
    recordResult(state, { text: "a", language: "yo" }, RESPONSE);
    expect(state.lastError).toBeNull();
  });
});

describe("canFileFeedback", () => {
  it("requires a displayed result", () => {
    expect(canFileFeedback(null, "accept", "")).toBe(false);
  });

  it("allows accept and bad_label without a correction", () => {
    const state = initialState();
    const entry = recordResult(state, { text: "a", language: "yo" }, RESPONSE);
    expect(canFileFeedback(entry, "accept", "")).toBe(true);
    expect(canFileFeedback(entry, "bad_label", "")).toBe(true);
  });

  it("blocks bad_rewrite until a correction is typed", () => {
    const state = initialState();
    const entry = recordResult(state, { text: "a", language: "yo" }, RESPONSE);
    expect(canFileFeedback(entry, "bad_rewrite", "")).toBe(false);
    expect(canFileFeedback(entry, "bad_rewrite", "   ")).toBe(false);
    expect(canFileFeedback(entry, "bad_rewrite", "o se dada")).toBe(true);
  });

  it("blocks a second submission for the same entry", () => {
    const state = initialState();
    const entry = recordResult(state, { text: "a", language: "yo" }, RESPONSE);
    markReviewed(entry, "accept", 3, null);
    expect(entry.feedbackId).toBe(3);
    expect(entry.verdict).toBe("accept");
    expect(canFileFeedback(entry, "accept", "")).toBe(false);
  });
});
