import { describe, expect, it } from "vitest";

import { createApp, type MapAdapter } from "../src/app.js";
import { blueMarkerCount } from "../src/layers.js";
import type { MapDocument } from "../src/types.js";
import {
  CLASSIC_ENVELOPE,
  RECOMMENDATIONS,
  apiErrorResponse,
  fakeService,
  flush,
  jsonResponse,
} from "./helpers.js";

class FakeMap implements MapAdapter {
  clickHandler: ((lat: number, lon: number) => void) | null = null;
  siteMarkers: Array<{ lat: number; lon: number }> = [];
  overlays: MapDocument[] = [];

  onClick(handler: (lat: number, lon: number) => void): void {
    this.clickHandler = handler;
  }
  setSiteMarker(lat: number, lon: number): void {
    this.siteMarkers.push({ lat, lon });
  }
  renderOverlay(doc: MapDocument): void {
    this.overlays.push(doc);
  }
  clearOverlay(): void {}

  click(lat: number, lon: number): void {
    this.clickHandler?.(lat, lon);
  }
}

function boot(routes: Parameters<typeof fakeService>[0]) {
  const root = document.createElement("div");
  document.body.appendChild(root);
  const map = new FakeMap();
  const service = fakeService(routes);
  const { store } = createApp(root, {
    apiBase: "http://service.test",
    fetchFn: service.fetchFn,
    map,
  });
  return { root, map, store, requests: service.requests };
}

describe("site picking", () => {
  it("places the marker and shows the coordinate to four decimals", () => {
    const { root, map } = boot({});
    map.click(34.15501234, -118.46899876);
    expect(root.querySelector(".site-readout")!.textContent).toBe(
      "site: 34.1550, -118.4690",
    );
    expect(map.siteMarkers.at(-1)).toEqual({ lat: 34.15501234, lon: -118.46899876 });
  });

  it("warns when the click lies outside the conterminous box", () => {
    const { root, map } = boot({});
    map.click(61.2181, -149.9003);
    const banner = root.querySelector(".banner") as HTMLElement;
    expect(banner.hidden).toBe(false);
    expect(banner.dataset["kind"]).toBe("warning");
    expect(root.querySelector(".site-readout")!.textContent).toBe(
      "site: 61.2181, -149.9003",
    );
  });
});

describe("ticket flow", () => {
  it("renders the five-column table and passes the map document through", async () => {
    const { root, map, requests } = boot({
      "POST /ticket": () => jsonResponse(CLASSIC_ENVELOPE),
    });
    map.click(34.155, -118.469);
    const input = root.querySelector("input[placeholder^='recipe id']") as HTMLInputElement;
    input.value = "recipe-1";
    (root.querySelector(".load-recipe") as HTMLButtonElement).click();
    await flush();

    expect(requests.filter((r) => r.path === "/ticket")).toHaveLength(1);
    const headers = [...root.querySelectorAll(".ticket-panel th")].map((th) => th.textContent);
    expect(headers).toEqual([
      "ingredient",
      "supplier",
      "Product offered by supplier",
      "Distance in miles",
      "Total food miles",
    ]);
    expect(root.querySelectorAll(".ticket-panel tbody tr")).toHaveLength(5);

    // blue markers equal distinct suppliers even with extra gray candidates
    const overlay = map.overlays.at(-1)!;
    const distinctSuppliers = new Set(
      CLASSIC_ENVELOPE.ticket.lines.map((line) => line.producer_id),
    );
    expect(blueMarkerCount(overlay)).toBe(distinctSuppliers.size);
    expect(overlay).toEqual(CLASSIC_ENVELOPE.map);
  });

  it("sends free-text ingredients as a list", async () => {
    const { root, map, requests } = boot({
      "POST /ticket": () => jsonResponse(CLASSIC_ENVELOPE),
    });
    map.click(34.155, -118.469);
    const input = root.querySelector(
      "input[placeholder^='ingredients']",
    ) as HTMLInputElement;
    input.value = " basil , tomatoes ,";
    (root.querySelector(".load-ingredients") as HTMLButtonElement).click();
    await flush();
    expect(requests[0]!.body).toMatchObject({ ingredients: ["basil", "tomatoes"] });
  });

  it("shows API errors as a dismissible banner", async () => {
    const { root, map } = boot({
      "POST /ticket": () => apiErrorResponse("not_found", "unknown recipe id 'zzz'", 404),
    });
    map.click(34.155, -118.469);
    const input = root.querySelector("input[placeholder^='recipe id']") as HTMLInputElement;
    input.value = "zzz";
    (root.querySelector(".load-recipe") as HTMLButtonElement).click();
    await flush();
    const banner = root.querySelector(".banner") as HTMLElement;
    expect(banner.hidden).toBe(false);
    expect(banner.dataset["kind"]).toBe("error");
    expect(banner.textContent).toContain("unknown recipe id 'zzz'");
    (root.querySelector(".banner-dismiss") as HTMLButtonElement).click();
    expect(banner.hidden).toBe(true);
  });
});

describe("recommendation flow", () => {
  it("lists rows in server order and a row click issues exactly one ticket request", async () => {
    const { root, map, requests } = boot({
      "GET /recommend": () => jsonResponse(RECOMMENDATIONS),
      "POST /ticket": () => jsonResponse(CLASSIC_ENVELOPE),
    });
    map.click(34.155, -118.469);
    (root.querySelector(".load-recommendations") as HTMLButtonElement).click();
    await flush();

    const ids = [...root.querySelectorAll(".recommend-panel tbody tr")].map(
      (row) => (row as HTMLElement).dataset["recipeId"],
    );
    expect(ids).toEqual(["recipe-2", "recipe-1", "recipe-7"]);

    const topRow = root.querySelector(".recommend-panel tbody tr") as HTMLElement;
    topRow.click();
    await flush();

    const ticketRequests = requests.filter((r) => r.path === "/ticket");
    expect(ticketRequests).toHaveLength(1);
    expect(ticketRequests[0]!.body).toMatchObject({
      recipe_id: "recipe-2",
      lat: 34.155,
      lon: -118.469,
    });
    expect(root.querySelectorAll(".ticket-panel tbody tr")).toHaveLength(5);
  });

  it("shows guidance when nothing is eligible", async () => {
    const { root, map } = boot({
      "GET /recommend": () =>
        apiErrorResponse("no_eligible_recipe", "no recipe could be sourced", 404),
    });
    map.click(34.155, -118.469);
    (root.querySelector(".load-recommendations") as HTMLButtonElement).click();
    await flush();
    const banner = root.querySelector(".banner") as HTMLElement;
    expect(banner.dataset["kind"]).toBe("info");
    expect(banner.textContent).toContain("Widen the radius");
  });

  it("every number on screen came from the service payload", async () => {
    const { root, map } = boot({
      "GET /recommend": () => jsonResponse(RECOMMENDATIONS),
      "POST /ticket": () => jsonResponse(CLASSIC_ENVELOPE),
    });
    map.click(34.155, -118.469);
    (root.querySelector(".load-recommendations") as HTMLButtonElement).click();
    await flush();
    (root.querySelector(".recommend-panel tbody tr") as HTMLElement).click();
    await flush();

    const allowed = new Set<string>();
    for (const row of RECOMMENDATIONS) {
      allowed.add(row.total_food_miles.toFixed(1));
      allowed.add(String(row.sourced_count));
      allowed.add(String(row.missing_count));
    }
    for (const line of CLASSIC_ENVELOPE.ticket.lines) {
      allowed.add(line.distance_miles.toFixed(1));
    }
    allowed.add(CLASSIC_ENVELOPE.ticket.total_food_miles.toFixed(1));
    const numericCells = [...root.querySelectorAll("td")]
      .map((td) => td.textContent ?? "")
      .filter((text) => /^\d+(\.\d+)?$/.test(text));
    expect(numericCells.length).toBeGreaterThan(0);
    for (const text of numericCells) {
      // ranks are positional, every other number must match the payload
      if (Number(text) <= RECOMMENDATIONS.length && Number.isInteger(Number(text))) continue;
      expect(allowed).toContain(text);
    }
  });
});
