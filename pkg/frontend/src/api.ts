/** Typed client for the distractor service; fetch is injectable for tests. */
import {
  FeedbackBody,
  GenerationRequest,
  GenerationResponse,
  Verdict,
} from "./types.js";

export class ApiError extends Error {
  constructor(message: string, public readonly status: number) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function asError(response: Response): Promise<ApiError> {
  let detail = `${response.status} ${response.statusText}`;
  try {
    const payload = await response.json();
    if (payload && payload.detail) detail = JSON.stringify(payload.detail);
  } catch {
    // non-JSON error body; keep the status line
  }
  return new ApiError(detail, response.status);
}

export function buildFeedbackBody(
  request: GenerationRequest,
  surface: string,
  verdict: Verdict,
  replacement: string | null,
  sessionId: string,
): FeedbackBody {
  return {
    request,
    surface,
    verdict,
    replacement: verdict === "edited" ? replacement : null,
    session_id: sessionId,
  };
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) throw await asError(response);
    return (await response.json()) as T;
  }

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`);
    if (!response.ok) throw await asError(response);
    return (await response.json()) as T;
  }

  requestDistractors(request: GenerationRequest): Promise<GenerationResponse> {
    return this.post<GenerationResponse>("/v1/distractors", request);
  }

  submitFeedback(body: FeedbackBody): Promise<{ id: number }> {
    return this.post<{ id: number }>("/v1/feedback", body);
  }

  health(): Promise<{ status: string; model_id: string; schema_version: number }> {
    return this.get("/v1/health");
  }
}
