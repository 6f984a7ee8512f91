import { ApiClient, ApiError } from "./api.js";
import type { Language, Verdict } from "./types.js";
import { initialState, canSubmit, canFileFeedback, recordResult, markReviewed } from "./state.js";
import type { SessionState } from "./state.js";
import {
  renderError,
  renderFeedback,
  renderHistory,
  renderResult,
  renderSubmit,
} from "./render.js";
import type { FeedbackRefs, ResultRefs } from "./render.js";

export interface AppController {
  state: SessionState;
  submit(): Promise<void>;
  fileFeedback(): Promise<void>;
  render(): void;
}

function must<T extends HTMLElement>(doc: Document, id: string): T {
  const el = doc.getElementById(id);
  if (el === null) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
}

export function initApp(doc: Document, client: ApiClient): AppController {
  const state = initialState();

  const language = must<HTMLSelectElement>(doc, "language");
  const draft = must<HTMLTextAreaElement>(doc, "draft");
  const submitButton = must<HTMLButtonElement>(doc, "submit");
  const errorBox = must<HTMLElement>(doc, "error");
  const history = must<HTMLElement>(doc, "history");

  const result: ResultRefs = {
    panel: must(doc, "result"),
    badge: must(doc, "badge"),
    probability: must(doc, "probability"),
    method: must(doc, "method"),
    output: must(doc, "output"),
    swaps: must(doc, "swaps"),
    bars: must(doc, "bars"),
  };

  const feedback: FeedbackRefs = {
    verdict: must<HTMLSelectElement>(doc, "verdict"),
    correctedRow: must(doc, "corrected-row"),
    corrected: must<HTMLTextAreaElement>(doc, "corrected"),
    button: must<HTMLButtonElement>(doc, "file-feedback"),
    status: must(doc, "feedback-status"),
  };
  const handle = must<HTMLInputElement>(doc, "handle");

  let feedbackInFlight = false;

  function render(): void {
    renderSubmit(submitButton, state);
    renderError(errorBox, state.lastError);
    renderResult(result, state.current);
    renderFeedback(feedback, state.current, feedbackInFlight);
    renderHistory(history, state.history);
  }

  async function submit(): Promise<void> {
    if (!canSubmit(state)) {
      return;
    }
    // The draft is sent exactly as typed; trimming or normalizing here
    // would break the byte-for-byte round trip of diacritics.
    const request = { text: state.draft, language: state.language };
    state.inFlight = true;
    state.lastError = null;
    render();
    try {
      const response = await client.detox(request);
      recordResult(state, request, response);
      feedback.verdict.value = "accept";
      feedback.corrected.value = "";
    } catch (err) {
      state.lastError = err instanceof ApiError ? err.message : String(err);
    } finally {
      state.inFlight = false;
      render();
    }
  }

  async function fileFeedback(): Promise<void> {
    const entry = state.current;
    const verdict = feedback.verdict.value as Verdict;
    const corrected = feedback.corrected.value;
    if (feedbackInFlight || !canFileFeedback(entry, verdict, corrected)) {
      return;
    }
    feedbackInFlight = true;
    render();
    try {
      const reply = await client.feedback({
        language: entry!.request.language,
        input_text: entry!.request.text,
        system_output: entry!.response.output_text,
        verdict,
        ...(verdict === "bad_rewrite" ? { corrected_text: corrected } : {}),
        ...(handle.value.trim() !== "" ? { annotator_handle: handle.value.trim() } : {}),
      });
      markReviewed(entry!, verdict, reply.id, verdict === "bad_rewrite" ? corrected : null);
      state.lastError = null;
    } catch (err) {
      state.lastError = err instanceof ApiError ? err.message : String(err);
    } finally {
      feedbackInFlight = false;
      render();
    }
  }

  language.addEventListener("change", () => {
    state.language = language.value as Language;
  });
  draft.addEventListener("input", () => {
    state.draft = draft.value;
    renderSubmit(submitButton, state);
  });
  submitButton.addEventListener("click", () => {
    void submit();
  });
  feedback.verdict.addEventListener("change", () => {
    renderFeedback(feedback, state.current, feedbackInFlight);
  });
  feedback.corrected.addEventListener("input", () => {
    renderFeedback(feedback, state.current, feedbackInFlight);
  });
  feedback.button.addEventListener("click", () => {
    void fileFeedback();
  });

  render();
  return { state, submit, fileFeedback, render };
}
