/** Thin typed client over the service endpoints.
 *
 * Every non-2xx body is a {code, message} object; the client rethrows
 * it as ApiError so views can render the message verbatim. Transport
 * failures get the synthetic code "network".
 */

import type {
  ProducerHit,
  RecommendParams,
  Recommendation,
  TicketEnvelope,
  TicketRequest,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.name = "ApiError";
    this.code = code;
    this.status = status;
  }
}

async function toApiError(response: Response): Promise<ApiError> {
  let code = "internal";
  let message = `unexpected status ${response.status}`;
  try {
    const body = await response.json();
    if (typeof body?.code === "string") code = body.code;
    if (typeof body?.message === "string") message = body.message;
  } catch {
    // keep the synthetic message when the body is not JSON
  }
  return new ApiError(code, message, response.status);
}

export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.base = baseUrl.replace(/\/+$/, "");
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.base + path, init);
    } catch (err) {
      if (err instanceof DOMException && err.name === "AbortError") throw err;
      throw new ApiError("network", `cannot reach service: ${String(err)}`, 0);
    }
    if (!response.ok) throw await toApiError(response);
    return (await response.json()) as T;
  }

  health(): Promise<{ status: string; producers: number; recipes: number }> {
    return this.request("/health");
  }

  ticket(body: TicketRequest, signal?: AbortSignal): Promise<TicketEnvelope> {
    return this.request("/ticket", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
  }

  recommend(params: RecommendParams, signal?: AbortSignal): Promise<Recommendation[]> {
    const query = new URLSearchParams({ lat: String(params.lat), lon: String(params.lon) });
    if (params.k !== undefined) query.set("k", String(params.k));
    if (params.policy !== undefined) query.set("policy", params.policy);
    if (params.max_radius_miles !== undefined && params.max_radius_miles !== null) {
      query.set("max_radius_miles", String(params.max_radius_miles));
    }
    return this.request(`/recommend?${query.toString()}`, { signal });
  }

  producers(
    ingredient: string,
    lat: number,
    lon: number,
    limit?: number,
  ): Promise<ProducerHit[]> {
    const query = new URLSearchParams({ ingredient, lat: String(lat), lon: String(lon) });
    if (limit !== undefined) query.set("limit", String(limit));
    return this.request(`/producers?${query.toString()}`);
  }
}
