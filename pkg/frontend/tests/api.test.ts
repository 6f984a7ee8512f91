import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import type { FetchLike } from "../src/api.js";

interface Captured {
  url: string;
  init: RequestInit | undefined;
}

function stubFetch(status: number, body: unknown, captured: Captured[]): FetchLike {
  return async (input, init) => {
    captured.push({ url: String(input), init });
    return new Response(JSON.stringify(body), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  };
}

describe("ApiClient.detox", () => {
  it("posts the sentence byte-for-byte, diacritics included", async () => {
    const captured: Captured[] = [];
    const reply = {
      label: "TOXIC",
      probability: 0.8,
      output_text: "Ọmọ dáadáa ni ọ́",
      method: "corpus_lookup",
      replaced_tokens: [],
      token_contributions: [],
    };
    const client = new ApiClient("", stubFetch(200, reply, captured));
    const text = "Ọmọ àlè ni ọ́ ́ kò dára";
    const result = await client.detox({ text, language: "yo" });

    expect(captured).toHaveLength(1);
    expect(captured[0]!.url).toBe("/api/v1/detox");
    expect(captured[0]!.init?.method).toBe("POST");
    const sent = JSON.parse(captured[0]!.init?.body as string);
    expect(sent.text).toBe(text);
    expect(sent.language).toBe("yo");
    expect(result.output_text).toBe("Ọmọ dáadáa ni ọ́");
  });

  it("prefixes the base URL", async () => {
    const captured: Captured[] = [];
    const client = new ApiClient("http://127.0.0.1:9", stubFetch(200, { id: 1 }, captured));
    await client.feedback({
      language: "xh",
      input_text: "a",
      system_output: "b",
      verdict: "accept",
    });
    expect(captured[0]!.url).toBe("http://127.0.0.1:9/api/v1/feedback");
  });
});

describe("error decoding", () => {
  it("surfaces a string detail", async () => {
    const client = new ApiClient("", stubFetch(404, { detail: "unknown language" }, []));
    await expect(client.detox({ text: "x", language: "yo" })).rejects.toThrowError(
      new ApiError(404, "unknown language"),
    );
  });

  it("surfaces the first message of a validation detail list", async () => {
    const body = { detail: [{ msg: "corrected_text is required", loc: ["body"] }] };
    const client = new ApiClient("", stubFetch(422, body, []));
    const failure = client.feedback({
      language: "xh",
      input_text: "a",
      system_output: "b",
      verdict: "bad_rewrite",
    });
    await expect(failure).rejects.toMatchObject({
      status: 422,
      message: "corrected_text is required",
    });
  });

  it("falls back to the status code for an unreadable body", async () => {
    const broken: FetchLike = async () => new Response("<html>", { status: 502 });
    const client = new ApiClient("", broken);
    await expect(client.health()).rejects.toMatchObject({ status: 502 });
  });
});

describe("health", () => {
  it("returns the parsed payload", async () => {
    const body = {
      status: "ok",
      models_loaded: ["xh", "yo"],
      versions: {},
    };
    const client = new ApiClient("", stubFetch(200, body, []));
    const health = await client.health();
    expect(health.status).toBe("ok");
    expect(health.models_loaded).toEqual(["xh", "yo"]);
  });
});
