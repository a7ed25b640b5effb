/** Group the service's GeoJSON by role for map rendering.
 *
 * The UI never computes geometry; it only sorts features into layers
 * and passes their coordinates and colors through untouched.
 */

import type { MapDocument, MapFeature } from "./types.js";

export interface LayerGroups {
  site: MapFeature[];
  nearest: MapFeature[];
  candidates: MapFeature[];
  edges: MapFeature[];
}

export function groupFeatures(doc: MapDocument): LayerGroups {
  const groups: LayerGroups = { site: [], nearest: [], candidates: [], edges: [] };
  for (const feature of doc.features) {
    switch (feature.properties["role"]) {
      case "site":
        groups.site.push(feature);
        break;
      case "nearest":
        groups.nearest.push(feature);
        break;
      case "candidate":
        groups.candidates.push(feature);
        break;
      case "edge":
        groups.edges.push(feature);
        break;
      default:
        // unknown roles still render, least prominent
        groups.candidates.push(feature);
    }
  }
  return groups;
}

export function blueMarkerCount(doc: MapDocument): number {
  return groupFeatures(doc).nearest.length;
}

export function markerColor(feature: MapFeature): string | undefined {
  const color = feature.properties["marker-color"] ?? feature.properties["stroke"];
  return typeof color === "string" ? color : undefined;
}
