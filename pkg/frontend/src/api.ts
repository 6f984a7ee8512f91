import type {
  DetoxRequest,
  DetoxResponse,
  FeedbackRequest,
  FeedbackResponse,
  HealthResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/**
 * Thin typed client over the service endpoints. The text is serialized
 * exactly as entered; no trimming or normalization happens on the client,
 * so diacritics reach the model byte-identical.
 */
export class ApiClient {
  private readonly fetchFn: FetchLike;

  constructor(
    private readonly baseUrl: string = "",
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => globalThis.fetch(input, init));
  }

  async detox(request: DetoxRequest): Promise<DetoxResponse> {
    return this.post<DetoxResponse>("/api/v1/detox", request);
  }

  async feedback(request: FeedbackRequest): Promise<FeedbackResponse> {
    return this.post<FeedbackResponse>("/api/v1/feedback", request);
  }

  async health(): Promise<HealthResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/api/v1/health`);
    return this.decode<HealthResponse>(response);
  }

  private async post<T>(path: string, payload: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    return this.decode<T>(response);
  }

  private async decode<T>(response: Response): Promise<T> {
    if (!response.ok) {
      let message = `request failed with status ${response.status}`;
      try {
        const body = await response.json();
        if (body && typeof body.detail === "string") {
          message = body.detail;
        } else if (body && Array.isArray(body.detail) && body.detail.length > 0) {
          message = body.detail[0].msg ?? message;
        }
      } catch {
        // keep the generic message when the error body is not JSON
      }
      throw new ApiError(response.status, message);
    }
    return (await response.json()) as T;
  }
}
