"""Per-recipe sourcing: nearest supplier per ingredient, ticket, and map.

The food-mile total counts each distinct supplier once, however many
ingredients it covers.  Ingredients with no matching producer (or none
inside the radius) are reported in `missing` rather than failing the
ticket; internal distances stay full precision and only rendering
rounds, so totals are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .errors import EmptyRecipeError, NoCandidateInIndexError, NoProducerInRadiusError
from .geo import GeoPoint, Miles, distance_miles
from .ingest import Producer, Recipe
from .matcher import MatchResult, TokenIndex, match_ingredient
from .spatial import SpatialIndex

TICKET_HEADERS = (
    "ingredient",
    "supplier",
    "Product offered by supplier",
    "Distance in miles",
    "Total food miles",
)

SITE_COLOR = "#2ca02c"
CANDIDATE_COLOR = "#9e9e9e"
NEAREST_COLOR = "#1f77b4"


@dataclass(frozen=True)
class TicketLine:
    ingredient: str
    producer_id: str
    producer_address: str
    product_offered: str
    distance: Miles


@dataclass(frozen=True)
class SourcingTicket:
    site: GeoPoint
    recipe_id: str
    lines: tuple[TicketLine, ...]
    missing: tuple[str, ...]
    total_food_miles: Miles


def dedupe_ingredients(phrases) -> list[str]:
    """Drop repeated phrases, preserving first-occurrence order."""
    seen: set[str] = set()
    out: list[str] = []
    for phrase in phrases:
        if phrase not in seen:
            seen.add(phrase)
            out.append(phrase)
    return out


def unique_supplier_total(lines) -> Miles:
    """Sum line distances counting each distinct supplier exactly once.

    fsum keeps the result independent of summation order.
    """
    by_id: dict[str, Miles] = {}
    for line in lines:
        by_id.setdefault(line.producer_id, line.distance)
    return math.fsum(by_id.values())


def match_all(recipe: Recipe, index: TokenIndex) -> dict[str, MatchResult]:
    """MatchResult per deduplicated ingredient phrase, in recipe order."""
    return {phrase: match_ingredient(phrase, index) for phrase in dedupe_ingredients(recipe.ingredients)}


def source_recipe(
    site: GeoPoint,
    recipe: Recipe,
    index: TokenIndex,
    spatial: SpatialIndex,
    max_radius: Miles | None = None,
) -> SourcingTicket:
    """Build the sourcing ticket for one recipe at one site."""
    phrases = dedupe_ingredients(recipe.ingredients)
    if not phrases:
        raise EmptyRecipeError(f"recipe {recipe.id!r} has no ingredients")
    lines: list[TicketLine] = []
    missing: list[str] = []
    for phrase in phrases:
        result = match_ingredient(phrase, index)
        if not result.producer_ids:
            missing.append(phrase)
            continue
        try:
            pid, dist = spatial.nearest(site, candidates=result.producer_ids, max_radius=max_radius)
        except (NoProducerInRadiusError, NoCandidateInIndexError):
            missing.append(phrase)
            continue
        producer = index.producers[pid]
        lines.append(
            TicketLine(
                ingredient=phrase,
                producer_id=pid,
                producer_address=producer.address,
                product_offered=getattr(producer, result.matched_field[pid]),
                distance=dist,
            )
        )
    return SourcingTicket(
        site=site,
        recipe_id=recipe.id,
        lines=tuple(lines),
        missing=tuple(missing),
        total_food_miles=unique_supplier_total(lines),
    )


def _point_feature(point: GeoPoint, properties: dict) -> dict:
    return {
        "type": "Feature",
        "geometry": {"type": "Point", "coordinates": [point.lon, point.lat]},
        "properties": properties,
    }


def ticket_to_geojson(
    ticket: SourcingTicket,
    candidates: Mapping[str, MatchResult],
    catalog: Mapping[str, Producer],
    metric: str = "greatcircle",
) -> dict:
    """RFC 7946 FeatureCollection for a ticket's supply map.

    One green site point; one gray point and one gray edge per candidate
    producer (deduplicated across ingredients); candidates chosen as a
    nearest supplier carry role "nearest" and the blue marker instead.
    Coordinates are [lon, lat] per RFC 7946.
    """
    features = [
        _point_feature(
            ticket.site,
            {"role": "site", "marker-color": SITE_COLOR, "recipe_id": ticket.recipe_id},
        )
    ]
    ingredients_of: dict[str, list[str]] = {}
    for phrase, result in candidates.items():
        for pid in result.producer_ids:
            ingredients_of.setdefault(pid, []).append(phrase)
    chosen = {line.producer_id for line in ticket.lines}
    for pid in sorted(ingredients_of):
        producer = catalog[pid]
        dist = distance_miles(ticket.site, producer.location, metric)
        role = "nearest" if pid in chosen else "candidate"
        features.append(
            _point_feature(
                producer.location,
                {
                    "role": role,
                    "marker-color": NEAREST_COLOR if role == "nearest" else CANDIDATE_COLOR,
                    "producer_id": pid,
                    "name": producer.name,
                    "address": producer.address,
                    "ingredients": ingredients_of[pid],
                    "distance_miles": dist,
                },
            )
        )
        features.append(
            {
                "type": "Feature",
                "geometry": {
                    "type": "LineString",
                    "coordinates": [
                        [ticket.site.lon, ticket.site.lat],
                        [producer.location.lon, producer.location.lat],
                    ],
                },
                "properties": {"role": "edge", "stroke": CANDIDATE_COLOR, "producer_id": pid},
            }
        )
    return {"type": "FeatureCollection", "features": features}


def ticket_to_dict(ticket: SourcingTicket) -> dict:
    """JSON-ready ticket; coordinates as {lat, lon} object fields."""
    return {
        "site": {"lat": ticket.site.lat, "lon": ticket.site.lon},
        "recipe_id": ticket.recipe_id,
        "lines": [
            {
                "ingredient": line.ingredient,
                "producer_id": line.producer_id,
                "producer_address": line.producer_address,
                "product_offered": line.product_offered,
                "distance_miles": line.distance,
            }
            for line in ticket.lines
        ],
        "missing": list(ticket.missing),
        "total_food_miles": ticket.total_food_miles,
    }


def render_ticket_text(ticket: SourcingTicket) -> str:
    """Ticket as TSV: the five classic columns, distances to one decimal.

    The total column repeats on every line.
    """
    rows = ["\t".join(TICKET_HEADERS)]
    total = f"{ticket.total_food_miles:.1f}"
    for line in ticket.lines:
        rows.append(
            "\t".join(
                (
                    line.ingredient,
                    line.producer_address,
                    line.product_offered,
                    f"{line.distance:.1f}",
                    total,
                )
            )
        )
    return "\n".join(rows) + "\n"
