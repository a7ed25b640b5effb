import { describe, expect, it } from "vitest";

import { blueMarkerCount, groupFeatures, markerColor } from "../src/layers.js";
import { makeMapDoc } from "./helpers.js";
import type { MapDocument } from "../src/types.js";

describe("groupFeatures", () => {
  it("splits features by role", () => {
    const doc = makeMapDoc(["farm-a", "farm-b"], ["farm-c"]);
    const groups = groupFeatures(doc);
    expect(groups.site).toHaveLength(1);
    expect(groups.nearest).toHaveLength(2);
    expect(groups.candidates).toHaveLength(1);
    expect(groups.edges).toHaveLength(3);
  });

  it("defaults unknown roles to the candidate layer", () => {
    const doc: MapDocument = {
      type: "FeatureCollection",
      features: [
        {
          type: "Feature",
          geometry: { type: "Point", coordinates: [0, 0] },
          properties: { role: "mystery" },
        },
      ],
    };
    expect(groupFeatures(doc).candidates).toHaveLength(1);
  });
});

describe("blueMarkerCount", () => {
  it("counts nearest markers only", () => {
    expect(blueMarkerCount(makeMapDoc(["a", "b", "c"], ["d", "e"]))).toBe(3);
    expect(blueMarkerCount(makeMapDoc([], []))).toBe(0);
  });
});

describe("markerColor", () => {
  it("passes the service's colors through untouched", () => {
    const doc = makeMapDoc(["farm-a"], ["farm-b"]);
    const groups = groupFeatures(doc);
    expect(markerColor(groups.site[0]!)).toBe("#2ca02c");
    expect(markerColor(groups.nearest[0]!)).toBe("#1f77b4");
    expect(markerColor(groups.candidates[0]!)).toBe("#9e9e9e");
    expect(markerColor(groups.edges[0]!)).toBe("#9e9e9e");
  });
});
