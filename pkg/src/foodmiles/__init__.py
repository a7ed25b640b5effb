"""Rank recipes by food miles and source ingredients from nearby organic producers."""

from .errors import (
    CacheMissNoResolverError,
    EmptyIndexError,
    EmptyRecipeError,
    FoodMilesError,
    MissingColumnError,
    NoCandidateInIndexError,
    NoEligibleRecipeError,
    NoProducerInRadiusError,
    ResolverFailureError,
)
from .geo import (
    CONTERMINOUS_LAT,
    CONTERMINOUS_LON,
    EARTH_RADIUS_MILES,
    GREATCIRCLE,
    METRICS,
    PLANAR,
    GeoPoint,
    Miles,
    distance_miles,
    great_circle_miles,
    in_conterminous_us,
    planar_degree_miles,
)
from .ingest import (
    GeocodeCache,
    Producer,
    Recipe,
    Site,
    filter_conterminous,
    geocode,
    parse_producers,
    parse_recipes,
    parse_sites,
)
from .matcher import MatchResult, TokenIndex, build_index, match_ingredient, normalize, tokens
from .recommender import (
    ALLOW_INCOMPLETE,
    EXCLUDE_INCOMPLETE,
    IngredientDistanceCache,
    Recommendation,
    recommend,
    warm_cache,
)
from .sourcing import (
    SourcingTicket,
    TicketLine,
    render_ticket_text,
    source_recipe,
    ticket_to_dict,
    ticket_to_geojson,
)
from .spatial import SpatialIndex, build_spatial, nearest

__version__ = "0.1.0"

__all__ = [
    "ALLOW_INCOMPLETE",
    "CONTERMINOUS_LAT",
    "CONTERMINOUS_LON",
    "CacheMissNoResolverError",
    "EARTH_RADIUS_MILES",
    "EXCLUDE_INCOMPLETE",
    "EmptyIndexError",
    "EmptyRecipeError",
    "FoodMilesError",
    "GREATCIRCLE",
    "GeoPoint",
    "GeocodeCache",
    "IngredientDistanceCache",
    "METRICS",
    "MatchResult",
    "Miles",
    "MissingColumnError",
    "NoCandidateInIndexError",
    "NoEligibleRecipeError",
    "NoProducerInRadiusError",
    "PLANAR",
    "Producer",
    "Recipe",
    "Recommendation",
    "ResolverFailureError",
    "Site",
    "SourcingTicket",
    "SpatialIndex",
    "TicketLine",
    "TokenIndex",
    "build_index",
    "build_spatial",
    "distance_miles",
    "filter_conterminous",
    "geocode",
    "great_circle_miles",
    "in_conterminous_us",
    "match_ingredient",
    "nearest",
    "normalize",
    "parse_producers",
    "parse_recipes",
    "parse_sites",
    "planar_degree_miles",
    "recommend",
    "render_ticket_text",
    "source_recipe",
    "ticket_to_dict",
    "ticket_to_geojson",
    "tokens",
    "warm_cache",
]
