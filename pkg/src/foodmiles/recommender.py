"""Rank recipes for a site by total food miles.

The per-ingredient nearest-supplier lookup depends only on the
normalized ingredient phrase (site, catalog, metric, and radius held
fixed), so results are memoized across recipes: the corpus has far
fewer distinct phrases than recipe lines.  A cache can also be warmed
once and reused across requests for the same site.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import NoCandidateInIndexError, NoEligibleRecipeError, NoProducerInRadiusError
from .geo import GeoPoint, Miles
from .ingest import Recipe
from .matcher import TokenIndex, match_ingredient, normalize
from .spatial import SpatialIndex
from .sourcing import dedupe_ingredients

EXCLUDE_INCOMPLETE = "exclude-incomplete"
ALLOW_INCOMPLETE = "allow-incomplete"
POLICIES = (EXCLUDE_INCOMPLETE, ALLOW_INCOMPLETE)

# Cache value for a phrase with no sourceable supplier.
_MISS = None


@dataclass(frozen=True)
class Recommendation:
    recipe_id: str
    total_food_miles: Miles
    sourced_count: int
    missing_count: int


@dataclass
class IngredientDistanceCache:
    """Nearest supplier per normalized phrase, for one fixed context.

    The context ties the cache to a site, catalog size, metric, and
    radius; reusing it anywhere else raises instead of quietly serving
    wrong distances.
    """

    context: tuple
    entries: dict[str, tuple[str, Miles] | None] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)


def cache_context(
    site: GeoPoint, spatial: SpatialIndex, max_radius: Miles | None
) -> tuple:
    return (site.lat, site.lon, spatial.metric, max_radius, len(spatial))


def _lookup(
    phrase: str,
    site: GeoPoint,
    index: TokenIndex,
    spatial: SpatialIndex,
    max_radius: Miles | None,
    entries: dict[str, tuple[str, Miles] | None] | None,
) -> tuple[str, Miles] | None:
    key = normalize(phrase)
    if entries is not None and key in entries:
        return entries[key]
    result = match_ingredient(phrase, index)
    value: tuple[str, Miles] | None = _MISS
    if result.producer_ids:
        try:
            value = spatial.nearest(site, candidates=result.producer_ids, max_radius=max_radius)
        except (NoProducerInRadiusError, NoCandidateInIndexError):
            value = _MISS
    if entries is not None:
        entries[key] = value
    return value


def warm_cache(
    site: GeoPoint,
    phrases,
    index: TokenIndex,
    spatial: SpatialIndex,
    max_radius: Miles | None = None,
    cache: IngredientDistanceCache | None = None,
) -> IngredientDistanceCache:
    """Resolve every phrase once into a reusable cache."""
    if cache is None:
        cache = IngredientDistanceCache(context=cache_context(site, spatial, max_radius))
    _check_context(cache, site, spatial, max_radius)
    for phrase in phrases:
        _lookup(phrase, site, index, spatial, max_radius, cache.entries)
    return cache


def _check_context(
    cache: IngredientDistanceCache,
    site: GeoPoint,
    spatial: SpatialIndex,
    max_radius: Miles | None,
) -> None:
    expected = cache_context(site, spatial, max_radius)
    if cache.context != expected:
        raise ValueError(f"cache context {cache.context!r} does not match request {expected!r}")


def recommend(
    site: GeoPoint,
    recipes,
    index: TokenIndex,
    spatial: SpatialIndex,
    k: int = 10,
    policy: str = EXCLUDE_INCOMPLETE,
    max_radius: Miles | None = None,
    cache: IngredientDistanceCache | None = None,
    memoize: bool = True,
) -> list[Recommendation]:
    """Top-k recipes by unique-supplier food miles, ascending.

    Ties break on recipe id.  With the default policy a recipe with any
    unsourceable ingredient is dropped; "allow-incomplete" keeps it,
    ranked by the total over the ingredients that did source.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    if cache is not None:
        _check_context(cache, site, spatial, max_radius)
        entries = cache.entries
    else:
        entries = {} if memoize else None

    ranked: list[Recommendation] = []
    for recipe in recipes:
        by_supplier: dict[str, Miles] = {}
        sourced = 0
        missing = 0
        for phrase in dedupe_ingredients(recipe.ingredients):
            hit = _lookup(phrase, site, index, spatial, max_radius, entries)
            if hit is _MISS:
                missing += 1
                continue
            sourced += 1
            pid, dist = hit
            by_supplier.setdefault(pid, dist)
        if missing and policy == EXCLUDE_INCOMPLETE:
            continue
        ranked.append(
            Recommendation(
                recipe_id=recipe.id,
                total_food_miles=math.fsum(by_supplier.values()),
                sourced_count=sourced,
                missing_count=missing,
            )
        )
    if not ranked:
        raise NoEligibleRecipeError("no recipe could be sourced under the requested policy")
    ranked.sort(key=lambda r: (r.total_food_miles, r.recipe_id))
    return ranked[:k]


def normalize_policy(text: str) -> str:
    """Accept the full policy names and the obvious short forms."""
    cleaned = text.strip().lower()
    aliases = {
        "exclude": EXCLUDE_INCOMPLETE,
        "allow": ALLOW_INCOMPLETE,
        EXCLUDE_INCOMPLETE: EXCLUDE_INCOMPLETE,
        ALLOW_INCOMPLETE: ALLOW_INCOMPLETE,
    }
    if cleaned not in aliases:
        raise ValueError(f"unknown policy {text!r}")
    return aliases[cleaned]
