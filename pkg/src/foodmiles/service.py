"""JSON-over-HTTP facade over sourcing and recommendation.

Every endpoint is a thin wrapper around exactly one library call; no
distance or matching logic lives here.  Every non-2xx response body is
a single {code, message} object.  Coordinates in request/response JSON
are {lat, lon} fields; the GeoJSON inside `map` uses [lon, lat] arrays
per that format's convention.
"""

from __future__ import annotations

import threading
from collections import OrderedDict

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import geo
from .config import Bundle, Config
from .errors import NoEligibleRecipeError
from .ingest import Recipe
from .matcher import match_ingredient
from .recommender import (
    IngredientDistanceCache,
    cache_context,
    normalize_policy,
    recommend,
)
from .sourcing import match_all, source_recipe, ticket_to_dict, ticket_to_geojson

ERROR_CODES = ("bad_request", "not_found", "no_supplier", "no_eligible_recipe", "internal")

_STATUS_OF = {
    "bad_request": 400,
    "not_found": 404,
    "no_supplier": 404,
    "no_eligible_recipe": 404,
    "internal": 500,
}


def api_error(code: str, message: str, status: int | None = None) -> JSONResponse:
    return JSONResponse(
        {"code": code, "message": message},
        status_code=_STATUS_OF[code] if status is None else status,
    )


class _ApiAbort(Exception):
    """Internal: carry an ApiError out of handler helpers."""

    def __init__(self, code: str, message: str, status: int | None = None):
        super().__init__(message)
        self.response = api_error(code, message, status)


class TicketRequest(BaseModel):
    lat: float
    lon: float
    recipe_id: str | None = None
    ingredients: list[str] | None = None
    metric: str | None = None
    max_radius_miles: float | None = None


class _SiteCaches:
    """Bounded LRU of warm per-site ingredient caches.

    Keyed by the exact (lat, lon, metric, radius) tuple so a cache can
    never be replayed in the wrong context; hits only save work.
    """

    def __init__(self, maxsize: int = 32):
        self.maxsize = maxsize
        self._data: OrderedDict[tuple, IngredientDistanceCache] = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key: tuple, make) -> IngredientDistanceCache:
        with self._lock:
            if key in self._data:
                self._data.move_to_end(key)
                return self._data[key]
            cache = make()
            self._data[key] = cache
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)
            return cache


def _site_or_abort(lat: float, lon: float) -> geo.GeoPoint:
    try:
        return geo.GeoPoint(lat, lon)
    except ValueError as exc:
        raise _ApiAbort("bad_request", str(exc))


def _metric_or_abort(metric: str | None, config: Config) -> str:
    chosen = config.metric if metric is None else metric
    if chosen not in geo.METRICS:
        raise _ApiAbort("bad_request", f"metric must be one of {geo.METRICS}, got {chosen!r}")
    return chosen


def _radius_or_abort(radius: float | None, config: Config) -> float | None:
    chosen = config.max_radius_miles if radius is None else radius
    if chosen is not None and chosen <= 0:
        raise _ApiAbort("bad_request", f"max_radius_miles must be positive, got {chosen}")
    return chosen


def create_app(config: Config, bundle: Bundle | None = None) -> FastAPI:
    """Build the application; pass bundle=None to model the pre-load state."""
    app = FastAPI(title="foodmiles", docs_url=None, redoc_url=None)
    app.state.config = config
    app.state.bundle = bundle
    app.state.site_caches = _SiteCaches()

    if config.cors_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[config.cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(_ApiAbort)
    async def _on_abort(request: Request, exc: _ApiAbort):
        return exc.response

    @app.exception_handler(RequestValidationError)
    async def _on_validation(request: Request, exc: RequestValidationError):
        return api_error("bad_request", str(exc.errors()[:1]), status=400)

    @app.exception_handler(StarletteHTTPException)
    async def _on_http(request: Request, exc: StarletteHTTPException):
        if exc.status_code == 404:
            return api_error("not_found", "no such endpoint", status=404)
        code = "bad_request" if exc.status_code < 500 else "internal"
        return api_error(code, str(exc.detail), status=exc.status_code)

    @app.exception_handler(Exception)
    async def _on_crash(request: Request, exc: Exception):
        return api_error("internal", f"{type(exc).__name__}: {exc}", status=500)

    def loaded() -> Bundle:
        if app.state.bundle is None:
            raise _ApiAbort("internal", "datasets not loaded yet", status=503)
        return app.state.bundle

    @app.get("/health")
    def health():
        bundle = loaded()
        return {
            "status": "ok",
            "producers": len(bundle.producers),
            "recipes": len(bundle.recipes),
        }

    @app.post("/ticket")
    def ticket(body: TicketRequest):
        bundle = loaded()
        site = _site_or_abort(body.lat, body.lon)
        metric = _metric_or_abort(body.metric, config)
        radius = _radius_or_abort(body.max_radius_miles, config)
        if (body.recipe_id is None) == (body.ingredients is None):
            raise _ApiAbort("bad_request", "pass exactly one of recipe_id or ingredients")
        if body.recipe_id is not None:
            recipe = bundle.recipes_by_id.get(body.recipe_id)
            if recipe is None:
                raise _ApiAbort("not_found", f"unknown recipe id {body.recipe_id!r}")
        else:
            phrases = tuple(s.strip() for s in body.ingredients if s and s.strip())
            if not phrases:
                raise _ApiAbort("bad_request", "ingredients list is empty")
            recipe = Recipe(id="custom", cuisine="", ingredients=phrases)
        tkt = source_recipe(site, recipe, bundle.index, bundle.spatial(metric), radius)
        candidates = match_all(recipe, bundle.index)
        return {
            "ticket": ticket_to_dict(tkt),
            "map": ticket_to_geojson(tkt, candidates, bundle.index.producers, metric),
        }

    @app.get("/recommend")
    def recommend_endpoint(
        lat: float,
        lon: float,
        k: int = 10,
        policy: str = "exclude-incomplete",
        max_radius_miles: float | None = None,
    ):
        bundle = loaded()
        site = _site_or_abort(lat, lon)
        if k < 1:
            raise _ApiAbort("bad_request", f"k must be >= 1, got {k}")
        try:
            chosen_policy = normalize_policy(policy)
        except ValueError as exc:
            raise _ApiAbort("bad_request", str(exc))
        radius = _radius_or_abort(max_radius_miles, config)
        spatial = bundle.spatial(config.metric)
        key = (site.lat, site.lon, config.metric, radius)
        cache = app.state.site_caches.get(
            key,
            lambda: IngredientDistanceCache(context=cache_context(site, spatial, radius)),
        )
        try:
            ranked = recommend(
                site,
                bundle.recipes,
                bundle.index,
                spatial,
                k=k,
                policy=chosen_policy,
                max_radius=radius,
                cache=cache,
            )
        except NoEligibleRecipeError as exc:
            raise _ApiAbort("no_eligible_recipe", str(exc), status=404)
        return [
            {
                "recipe_id": r.recipe_id,
                "total_food_miles": r.total_food_miles,
                "sourced_count": r.sourced_count,
                "missing_count": r.missing_count,
            }
            for r in ranked
        ]

    @app.get("/producers")
    def producers(ingredient: str, lat: float, lon: float, limit: int = 50):
        bundle = loaded()
        site = _site_or_abort(lat, lon)
        if not ingredient.strip():
            raise _ApiAbort("bad_request", "ingredient must be non-empty")
        if limit < 1:
            raise _ApiAbort("bad_request", f"limit must be >= 1, got {limit}")
        result = match_ingredient(ingredient, bundle.index)
        rows = []
        for pid in result.producer_ids:
            producer = bundle.index.producers[pid]
            dist = geo.distance_miles(site, producer.location, config.metric)
            rows.append((dist, pid, producer))
        rows.sort(key=lambda r: (r[0], r[1]))
        return [
            {
                "producer_id": pid,
                "name": producer.name,
                "address": producer.address,
                "product_offered": getattr(producer, result.matched_field[pid]),
                "distance_miles": dist,
            }
            for dist, pid, producer in rows[:limit]
        ]

    return app
