/** Shared fixtures and a recording fake of the HTTP service. */

import type {
  MapDocument,
  MapFeature,
  Recommendation,
  Ticket,
  TicketEnvelope,
} from "../src/types.js";
import type { FetchLike } from "../src/api.js";

export const CLASSIC_TICKET: Ticket = {
  site: { lat: 34.155, lon: -118.469 },
  recipe_id: "recipe-1",
  lines: [
    {
      ingredient: "basil",
      producer_id: "farm-a",
      producer_address: "4501 Canyon Rd, Agoura Hills, CA",
      product_offered: "Basil; Tomatoes",
      distance_miles: 12.600000000000096,
    },
    {
      ingredient: "tomatoes",
      producer_id: "farm-a",
      producer_address: "4501 Canyon Rd, Agoura Hills, CA",
      product_offered: "Basil; Tomatoes",
      distance_miles: 12.600000000000096,
    },
    {
      ingredient: "wheat bread",
      producer_id: "farm-b",
      producer_address: "812 Mill St, Burbank, CA",
      product_offered: "Wheat Loaf Bread",
      distance_miles: 4.599999999999966,
    },
    {
      ingredient: "milk",
      producer_id: "farm-c",
      producer_address: "77 Creamery Way, Glendale, CA",
      product_offered: "Cow's milk",
      distance_miles: 3.2000000000000317,
    },
    {
      ingredient: "yeast",
      producer_id: "farm-d",
      producer_address: "19 Culture Blvd, Santa Clarita, CA",
      product_offered: "Yeast Extract Type Flavor O.S. (AU0179)",
      distance_miles: 22.000000000000338,
    },
  ],
  missing: [],
  total_food_miles: 42.40000000000051,
};

function point(lon: number, lat: number, properties: Record<string, unknown>): MapFeature {
  return { type: "Feature", geometry: { type: "Point", coordinates: [lon, lat] }, properties };
}

/** Site marker plus a point and an edge per candidate; `nearest` ids get
 * the blue role, the rest stay gray candidates. */
export function makeMapDoc(nearest: string[], extraCandidates: string[] = []): MapDocument {
  const features: MapFeature[] = [
    point(-118.469, 34.155, { role: "site", "marker-color": "#2ca02c" }),
  ];
  const all = [...nearest, ...extraCandidates];
  all.forEach((producerId, i) => {
    const lon = -118.469 + 0.01 * (i + 1);
    const isNearest = nearest.includes(producerId);
    features.push(
      point(lon, 34.3, {
        role: isNearest ? "nearest" : "candidate",
        producer_id: producerId,
        "marker-color": isNearest ? "#1f77b4" : "#9e9e9e",
      }),
    );
    features.push({
      type: "Feature",
      geometry: {
        type: "LineString",
        coordinates: [
          [-118.469, 34.155],
          [lon, 34.3],
        ],
      },
      properties: { role: "edge", producer_id: producerId, stroke: "#9e9e9e" },
    });
  });
  return { type: "FeatureCollection", features };
}

export const CLASSIC_ENVELOPE: TicketEnvelope = {
  ticket: CLASSIC_TICKET,
  // farm-e matched an ingredient but was not chosen for any line
  map: makeMapDoc(["farm-a", "farm-b", "farm-c", "farm-d"], ["farm-e"]),
};

export const RECOMMENDATIONS: Recommendation[] = [
  { recipe_id: "recipe-2", total_food_miles: 15.8000000000003, sourced_count: 2, missing_count: 0 },
  { recipe_id: "recipe-1", total_food_miles: 42.40000000000051, sourced_count: 5, missing_count: 0 },
  { recipe_id: "recipe-7", total_food_miles: 60.1, sourced_count: 3, missing_count: 1 },
];

export interface RecordedRequest {
  method: string;
  path: string;
  url: string;
  body?: unknown;
}

export type Routes = Record<
  string,
  (request: RecordedRequest) => Response | Promise<Response>
>;

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function apiErrorResponse(code: string, message: string, status: number): Response {
  return jsonResponse({ code, message }, status);
}

/** Fake service: routes keyed as "POST /ticket"; records every request. */
export function fakeService(routes: Routes): { fetchFn: FetchLike; requests: RecordedRequest[] } {
  const requests: RecordedRequest[] = [];
  const fetchFn: FetchLike = async (input, init) => {
    const url = new URL(input);
    const method = init?.method ?? "GET";
    const recorded: RecordedRequest = { method, path: url.pathname, url: input };
    if (typeof init?.body === "string") recorded.body = JSON.parse(init.body);
    requests.push(recorded);
    if (init?.signal?.aborted) {
      throw new DOMException("The operation was aborted.", "AbortError");
    }
    const handler = routes[`${method} ${url.pathname}`];
    if (!handler) return jsonResponse({ code: "not_found", message: "no such endpoint" }, 404);
    return handler(recorded);
  };
  return { fetchFn, requests };
}

export interface Deferred<T> {
  promise: Promise<T>;
  resolve: (value: T) => void;
  reject: (reason?: unknown) => void;
}

export function deferred<T>(): Deferred<T> {
  let resolve!: (value: T) => void;
  let reject!: (reason?: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

export async function flush(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
}
