"""Coordinate types and distance functions in statute miles.

Two metrics are provided: great-circle (haversine, the default) and a
planar equirectangular approximation kept for compatibility with the
original degree-based Euclidean computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Statute miles.  A single fixed radius keeps every distance deterministic.
EARTH_RADIUS_MILES = 3958.8

# Statute miles per degree of latitude used by the planar metric.
MILES_PER_DEGREE = 69.0

# Bounding box of the conterminous 48 states (lat south/north, lon west/east).
CONTERMINOUS_LAT = (24.4, 49.5)
CONTERMINOUS_LON = (-125.0, -66.9)

GREATCIRCLE = "greatcircle"
PLANAR = "planar"
METRICS = (GREATCIRCLE, PLANAR)

# Distances are plain non-negative finite floats in statute miles.
Miles = float


@dataclass(frozen=True)
class GeoPoint:
    """A latitude/longitude pair in decimal degrees (WGS84)."""

    lat: float
    lon: float

    def __post_init__(self):
        if not (math.isfinite(self.lat) and math.isfinite(self.lon)):
            raise ValueError(f"coordinates must be finite: ({self.lat}, {self.lon})")
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"latitude out of range [-90, 90]: {self.lat}")
        if not -180.0 <= self.lon <= 180.0:
            raise ValueError(f"longitude out of range [-180, 180]: {self.lon}")


def great_circle_miles(a: GeoPoint, b: GeoPoint) -> Miles:
    """Haversine great-circle distance between two points, in miles.

    Symmetric, zero iff the coordinates are equal.
    """
    phi1 = math.radians(a.lat)
    phi2 = math.radians(b.lat)
    dphi = math.radians(b.lat - a.lat)
    dlam = math.radians(b.lon - a.lon)
    h = math.sin(dphi / 2.0) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2.0) ** 2
    # Clamp guards asin against rounding slightly above 1 for antipodes.
    return 2.0 * EARTH_RADIUS_MILES * math.asin(min(1.0, math.sqrt(h)))


def planar_degree_miles(a: GeoPoint, b: GeoPoint) -> Miles:
    """Equirectangular approximation: degree distance scaled to miles.

    sqrt(dlat^2 + (dlon * cos(mean lat))^2) * 69.0.  Intended for
    conterminous-US separations; do not use across the antimeridian.
    """
    mean_lat = math.radians((a.lat + b.lat) / 2.0)
    return MILES_PER_DEGREE * math.hypot(a.lat - b.lat, (a.lon - b.lon) * math.cos(mean_lat))


def distance_miles(a: GeoPoint, b: GeoPoint, metric: str = GREATCIRCLE) -> Miles:
    """Distance under the named metric ("greatcircle" or "planar")."""
    if metric == GREATCIRCLE:
        return great_circle_miles(a, b)
    if metric == PLANAR:
        return planar_degree_miles(a, b)
    raise ValueError(f"unknown metric: {metric!r}")


def in_conterminous_us(p: GeoPoint) -> bool:
    """True iff the point falls inside the conterminous-48 bounding box."""
    return (
        CONTERMINOUS_LAT[0] <= p.lat <= CONTERMINOUS_LAT[1]
        and CONTERMINOUS_LON[0] <= p.lon <= CONTERMINOUS_LON[1]
    )


def unit_vector(p: GeoPoint) -> tuple[float, float, float]:
    """Embed a point on the unit sphere.

    Chord distance between embeddings is strictly monotone in central
    angle, which makes great-circle nearest-neighbor search over these
    vectors exact.
    """
    phi = math.radians(p.lat)
    lam = math.radians(p.lon)
    return (math.cos(phi) * math.cos(lam), math.cos(phi) * math.sin(lam), math.sin(phi))
