/** Application state and request lifecycle.
 *
 * Panels hold the most recent successful response. Each panel allows
 * one in-flight request; issuing a new one aborts and supersedes the
 * old, and a response is applied only if its sequence number is still
 * the latest for that panel, so out-of-order arrivals never overwrite
 * newer state.
 */

import { ApiClient, ApiError } from "./api.js";
import type {
  Metric,
  Policy,
  Recommendation,
  TicketEnvelope,
} from "./types.js";

// warning only; the server remains the authority on matchability
const BOX = { latMin: 24.4, latMax: 49.5, lonMin: -125.0, lonMax: -66.9 };

export function inConterminousBox(lat: number, lon: number): boolean {
  return lat >= BOX.latMin && lat <= BOX.latMax && lon >= BOX.lonMin && lon <= BOX.lonMax;
}

export type Selection =
  | { kind: "recipe"; recipeId: string }
  | { kind: "custom"; ingredients: string[] };

export interface Banner {
  kind: "error" | "warning" | "info";
  message: string;
}

export interface UiState {
  site: { lat: number; lon: number } | null;
  selection: Selection | null;
  metric: Metric;
  maxRadiusMiles: number | null;
  k: number;
  policy: Policy;
  ticket: TicketEnvelope | null;
  ticketStale: boolean;
  ticketPending: boolean;
  recommendations: Recommendation[] | null;
  recommendationsStale: boolean;
  recommendationsPending: boolean;
  banner: Banner | null;
}

interface Panel {
  seq: number;
  controller: AbortController | null;
}

export class Store {
  readonly state: UiState = {
    site: null,
    selection: null,
    metric: "greatcircle",
    maxRadiusMiles: null,
    k: 10,
    policy: "exclude-incomplete",
    ticket: null,
    ticketStale: false,
    ticketPending: false,
    recommendations: null,
    recommendationsStale: false,
    recommendationsPending: false,
    banner: null,
  };

  private readonly client: ApiClient;
  private readonly listeners = new Set<() => void>();
  private readonly panels: { ticket: Panel; recommend: Panel } = {
    ticket: { seq: 0, controller: null },
    recommend: { seq: 0, controller: null },
  };

  constructor(client: ApiClient) {
    this.client = client;
  }

  subscribe(listener: () => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  dismissBanner(): void {
    this.state.banner = null;
    this.emit();
  }

  setSite(lat: number, lon: number): void {
    this.state.site = { lat, lon };
    this.state.banner = inConterminousBox(lat, lon)
      ? null
      : {
          kind: "warning",
          message:
            "Site is outside the conterminous US; the service may find no suppliers.",
        };
    if (this.state.ticket) this.state.ticketStale = true;
    if (this.state.recommendations) this.state.recommendationsStale = true;
    this.emit();
    if (this.state.selection) void this.requestTicket();
    if (this.state.recommendations) void this.requestRecommendations();
  }

  selectRecipe(recipeId: string): void {
    this.state.selection = { kind: "recipe", recipeId };
    this.emit();
    void this.requestTicket();
  }

  setIngredients(ingredients: string[]): void {
    const cleaned = ingredients.map((s) => s.trim()).filter((s) => s.length > 0);
    this.state.selection = { kind: "custom", ingredients: cleaned };
    this.emit();
    void this.requestTicket();
  }

  setMetric(metric: Metric): void {
    this.state.metric = metric;
    if (this.state.ticket) this.state.ticketStale = true;
    this.emit();
    if (this.state.selection) void this.requestTicket();
  }

  setRadius(miles: number | null): void {
    this.state.maxRadiusMiles = miles;
    if (this.state.ticket) this.state.ticketStale = true;
    if (this.state.recommendations) this.state.recommendationsStale = true;
    this.emit();
    if (this.state.selection) void this.requestTicket();
    if (this.state.recommendations) void this.requestRecommendations();
  }

  setK(k: number): void {
    this.state.k = k;
    this.emit();
    if (this.state.recommendations) void this.requestRecommendations();
  }

  setPolicy(policy: Policy): void {
    this.state.policy = policy;
    this.emit();
    if (this.state.recommendations) void this.requestRecommendations();
  }

  private begin(panel: Panel): { seq: number; signal: AbortSignal } {
    panel.controller?.abort();
    panel.controller = new AbortController();
    panel.seq += 1;
    return { seq: panel.seq, signal: panel.controller.signal };
  }

  private isCurrent(panel: Panel, seq: number): boolean {
    return panel.seq === seq;
  }

  async requestTicket(): Promise<void> {
    const { site, selection } = this.state;
    if (!site || !selection) return;
    const { seq, signal } = this.begin(this.panels.ticket);
    this.state.ticketPending = true;
    this.emit();
    try {
      const envelope = await this.client.ticket(
        {
          lat: site.lat,
          lon: site.lon,
          ...(selection.kind === "recipe"
            ? { recipe_id: selection.recipeId }
            : { ingredients: selection.ingredients }),
          metric: this.state.metric,
          ...(this.state.maxRadiusMiles !== null
            ? { max_radius_miles: this.state.maxRadiusMiles }
            : {}),
        },
        signal,
      );
      if (!this.isCurrent(this.panels.ticket, seq)) return;
      this.state.ticket = envelope;
      this.state.ticketStale = false;
      this.state.ticketPending = false;
      this.emit();
    } catch (err) {
      if (!this.isCurrent(this.panels.ticket, seq)) return;
      if (err instanceof DOMException && err.name === "AbortError") return;
      this.state.ticketPending = false;
      this.state.banner = {
        kind: "error",
        message: err instanceof ApiError ? err.message : String(err),
      };
      this.emit();
    }
  }

  async requestRecommendations(): Promise<void> {
    const { site } = this.state;
    if (!site) return;
    const { seq, signal } = this.begin(this.panels.recommend);
    this.state.recommendationsPending = true;
    this.emit();
    try {
      const rows = await this.client.recommend(
        {
          lat: site.lat,
          lon: site.lon,
          k: this.state.k,
          policy: this.state.policy,
          ...(this.state.maxRadiusMiles !== null
            ? { max_radius_miles: this.state.maxRadiusMiles }
            : {}),
        },
        signal,
      );
      if (!this.isCurrent(this.panels.recommend, seq)) return;
      this.state.recommendations = rows;
      this.state.recommendationsStale = false;
      this.state.recommendationsPending = false;
      this.emit();
    } catch (err) {
      if (!this.isCurrent(this.panels.recommend, seq)) return;
      if (err instanceof DOMException && err.name === "AbortError") return;
      this.state.recommendationsPending = false;
      if (err instanceof ApiError && err.code === "no_eligible_recipe") {
        this.state.banner = {
          kind: "info",
          message:
            "No recipe could be fully sourced here. Widen the radius or switch to the allow-incomplete policy.",
        };
      } else {
        this.state.banner = {
          kind: "error",
          message: err instanceof ApiError ? err.message : String(err),
        };
      }
      this.emit();
    }
  }
}
