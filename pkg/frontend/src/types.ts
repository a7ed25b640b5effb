/** Wire types for the foodmiles HTTP API. */

export interface SitePoint {
  lat: number;
  lon: number;
}

export interface TicketLine {
  ingredient: string;
  producer_id: string;
  producer_address: string;
  product_offered: string;
  distance_miles: number;
}

export interface Ticket {
  site: SitePoint;
  recipe_id: string;
  lines: TicketLine[];
  missing: string[];
  total_food_miles: number;
}

export interface PointGeometry {
  type: "Point";
  coordinates: [number, number]; // [lon, lat]
}

export interface LineStringGeometry {
  type: "LineString";
  coordinates: [number, number][];
}

export interface MapFeature {
  type: "Feature";
  geometry: PointGeometry | LineStringGeometry;
  properties: Record<string, unknown>;
}

export interface MapDocument {
  type: "FeatureCollection";
  features: MapFeature[];
}

export interface TicketEnvelope {
  ticket: Ticket;
  map: MapDocument;
}

export interface Recommendation {
  recipe_id: string;
  total_food_miles: number;
  sourced_count: number;
  missing_count: number;
}

export interface ProducerHit {
  producer_id: string;
  name: string;
  address: string;
  product_offered: string;
  distance_miles: number;
}

export type Metric = "greatcircle" | "planar";
export type Policy = "exclude-incomplete" | "allow-incomplete";

export interface TicketRequest {
  lat: number;
  lon: number;
  recipe_id?: string;
  ingredients?: string[];
  metric?: Metric;
  max_radius_miles?: number;
}

export interface RecommendParams {
  lat: number;
  lon: number;
  k?: number;
  policy?: Policy;
  max_radius_miles?: number;
}
