/** Page assembly: map adapter, control bar, panels, banner.
 *
 * All numbers shown on screen come from service responses; this layer
 * only formats and places them.
 */

import { ApiClient, type FetchLike } from "./api.js";
import { groupFeatures, markerColor } from "./layers.js";
import { renderRecommendations } from "./recommendView.js";
import { Store } from "./state.js";
import { renderTicket } from "./ticketView.js";
import type { MapDocument, Metric, Policy } from "./types.js";

export interface MapAdapter {
  onClick(handler: (lat: number, lon: number) => void): void;
  setSiteMarker(lat: number, lon: number): void;
  renderOverlay(doc: MapDocument): void;
  clearOverlay(): void;
}

class NullMap implements MapAdapter {
  onClick(): void {}
  setSiteMarker(): void {}
  renderOverlay(): void {}
  clearOverlay(): void {}
}

export interface AppOptions {
  apiBase?: string;
  fetchFn?: FetchLike;
  map?: MapAdapter;
}

function control(label: string, input: HTMLElement): HTMLLabelElement {
  const wrap = document.createElement("label");
  wrap.className = "control";
  wrap.append(label + " ", input);
  return wrap;
}

export function createApp(root: HTMLElement, options: AppOptions = {}): { store: Store } {
  const client = new ApiClient(options.apiBase ?? "http://127.0.0.1:8000", options.fetchFn);
  const store = new Store(client);
  const map = options.map ?? new NullMap();

  root.textContent = "";
  root.className = "foodmiles-app";

  const banner = document.createElement("div");
  banner.className = "banner";
  banner.hidden = true;
  const bannerText = document.createElement("span");
  const dismiss = document.createElement("button");
  dismiss.className = "banner-dismiss";
  dismiss.textContent = "x";
  dismiss.addEventListener("click", () => store.dismissBanner());
  banner.append(bannerText, dismiss);
  root.appendChild(banner);

  const controls = document.createElement("div");
  controls.className = "controls";

  const siteReadout = document.createElement("span");
  siteReadout.className = "site-readout";
  siteReadout.textContent = "site: click the map";
  controls.appendChild(siteReadout);

  const recipeInput = document.createElement("input");
  recipeInput.placeholder = "recipe id, e.g. recipe-12";
  const recipeButton = document.createElement("button");
  recipeButton.className = "load-recipe";
  recipeButton.textContent = "Ticket by recipe";
  recipeButton.addEventListener("click", () => {
    if (recipeInput.value.trim()) store.selectRecipe(recipeInput.value.trim());
  });
  controls.append(control("recipe", recipeInput), recipeButton);

  const ingredientsInput = document.createElement("input");
  ingredientsInput.placeholder = "ingredients, comma separated";
  const ingredientsButton = document.createElement("button");
  ingredientsButton.className = "load-ingredients";
  ingredientsButton.textContent = "Ticket from ingredients";
  ingredientsButton.addEventListener("click", () => {
    store.setIngredients(ingredientsInput.value.split(","));
  });
  controls.append(control("or type", ingredientsInput), ingredientsButton);

  const metricSelect = document.createElement("select");
  for (const metric of ["greatcircle", "planar"]) {
    const option = document.createElement("option");
    option.value = metric;
    option.textContent = metric;
    metricSelect.appendChild(option);
  }
  metricSelect.addEventListener("change", () => store.setMetric(metricSelect.value as Metric));
  controls.appendChild(control("metric", metricSelect));

  const radiusInput = document.createElement("input");
  radiusInput.type = "number";
  radiusInput.min = "1";
  radiusInput.placeholder = "no limit";
  radiusInput.className = "radius-input";
  radiusInput.addEventListener("change", () => {
    const value = radiusInput.value.trim();
    store.setRadius(value === "" ? null : Number(value));
  });
  controls.appendChild(control("max radius (mi)", radiusInput));

  const kInput = document.createElement("input");
  kInput.type = "range";
  kInput.min = "1";
  kInput.max = "50";
  kInput.value = "10";
  kInput.className = "k-input";
  kInput.addEventListener("change", () => store.setK(Number(kInput.value)));
  controls.appendChild(control("k", kInput));

  const policySelect = document.createElement("select");
  for (const policy of ["exclude-incomplete", "allow-incomplete"]) {
    const option = document.createElement("option");
    option.value = policy;
    option.textContent = policy;
    policySelect.appendChild(option);
  }
  policySelect.addEventListener("change", () =>
    store.setPolicy(policySelect.value as Policy),
  );
  controls.appendChild(control("policy", policySelect));

  const recommendButton = document.createElement("button");
  recommendButton.className = "load-recommendations";
  recommendButton.textContent = "Recommend";
  recommendButton.addEventListener("click", () => void store.requestRecommendations());
  controls.appendChild(recommendButton);

  root.appendChild(controls);

  const ticketPanel = document.createElement("div");
  ticketPanel.className = "ticket-panel";
  const recommendPanel = document.createElement("div");
  recommendPanel.className = "recommend-panel";
  root.append(ticketPanel, recommendPanel);

  map.onClick((lat, lon) => store.setSite(lat, lon));

  store.subscribe(() => {
    const state = store.state;
    banner.hidden = state.banner === null;
    if (state.banner) {
      bannerText.textContent = state.banner.message;
      banner.dataset["kind"] = state.banner.kind;
    }
    if (state.site) {
      siteReadout.textContent = `site: ${state.site.lat.toFixed(4)}, ${state.site.lon.toFixed(4)}`;
      map.setSiteMarker(state.site.lat, state.site.lon);
    }
    if (state.ticket) {
      renderTicket(ticketPanel, state.ticket.ticket, state.ticketStale);
      map.renderOverlay(state.ticket.map);
    } else {
      ticketPanel.textContent = "";
    }
    if (state.recommendations) {
      renderRecommendations(
        recommendPanel,
        state.recommendations,
        state.recommendationsStale,
        (recipeId) => store.selectRecipe(recipeId),
      );
    } else {
      recommendPanel.textContent = "";
    }
  });

  return { store };
}

interface LeafletGlobal {
  map(el: HTMLElement): LeafletMap;
  tileLayer(url: string, opts: { attribution: string; maxZoom: number }): LeafletLayer;
  circleMarker(latlng: [number, number], opts: Record<string, unknown>): LeafletLayer;
  marker(latlng: [number, number]): LeafletLayer;
  geoJSON(doc: unknown, opts: Record<string, unknown>): LeafletLayer;
}

interface LeafletMap {
  setView(center: [number, number], zoom: number): LeafletMap;
  on(event: string, handler: (e: { latlng: { lat: number; lng: number } }) => void): void;
  removeLayer(layer: LeafletLayer): void;
}

interface LeafletLayer {
  addTo(map: LeafletMap): LeafletLayer;
}

/** Bind a Leaflet instance (window.L, loaded from the page) to MapAdapter. */
export function createLeafletAdapter(element: HTMLElement): MapAdapter {
  const L = (globalThis as { L?: LeafletGlobal }).L;
  if (!L) return new NullMap();
  const leafletMap = L.map(element).setView([39.0, -98.0], 4);
  L.tileLayer("https://tile.openstreetmap.org/{z}/{x}/{y}.png", {
    attribution: "&copy; OpenStreetMap contributors",
    maxZoom: 19,
  }).addTo(leafletMap);

  let siteMarker: LeafletLayer | null = null;
  let overlay: LeafletLayer | null = null;

  return {
    onClick(handler) {
      leafletMap.on("click", (event) => handler(event.latlng.lat, event.latlng.lng));
    },
    setSiteMarker(lat, lon) {
      if (siteMarker) leafletMap.removeLayer(siteMarker);
      siteMarker = L.circleMarker([lat, lon], {
        radius: 8,
        color: "#2ca02c",
        fillColor: "#2ca02c",
        fillOpacity: 0.9,
      }).addTo(leafletMap);
    },
    renderOverlay(doc) {
      this.clearOverlay();
      const groups = groupFeatures(doc);
      const styled = {
        style: (feature: unknown) => ({
          color: markerColor(feature as never) ?? "#9e9e9e",
          weight: 2,
        }),
        pointToLayer: (feature: unknown, latlng: [number, number]) =>
          L.circleMarker(latlng, {
            radius: 6,
            color: markerColor(feature as never) ?? "#9e9e9e",
            fillColor: markerColor(feature as never) ?? "#9e9e9e",
            fillOpacity: 0.85,
          }),
      };
      // edges under markers; site stays the standalone green marker
      overlay = L.geoJSON(
        { type: "FeatureCollection", features: [...groups.edges, ...groups.candidates, ...groups.nearest, ...groups.site] },
        styled,
      ).addTo(leafletMap);
    },
    clearOverlay() {
      if (overlay) {
        leafletMap.removeLayer(overlay);
        overlay = null;
      }
    },
  };
}
