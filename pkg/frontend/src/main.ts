/** Browser entry point. The API base comes from, in order, the ?api=
 * query parameter, a FOODMILES_API_BASE global set by the page, or the
 * local default. */

import { createApp, createLeafletAdapter } from "./app.js";

const params = new URLSearchParams(window.location.search);
const apiBase =
  params.get("api") ??
  (globalThis as { FOODMILES_API_BASE?: string }).FOODMILES_API_BASE ??
  "http://127.0.0.1:8000";

const mapElement = document.getElementById("map");
const appElement = document.getElementById("app");
if (mapElement && appElement) {
  createApp(appElement, { apiBase, map: createLeafletAdapter(mapElement) });
}
