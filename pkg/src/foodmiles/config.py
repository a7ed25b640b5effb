"""Runtime configuration and dataset loading.

Settings resolve in precedence order: explicit overrides (CLI flags),
then FOODMILES_* environment variables, then a JSON config file, then
defaults.  A Bundle holds everything a query needs: parsed datasets,
the token index, and lazily built spatial indexes per metric.
"""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass

from . import geo
from .ingest import (
    GeocodeCache,
    Producer,
    Recipe,
    Site,
    filter_conterminous,
    parse_producers,
    parse_recipes,
    parse_sites,
)
from .matcher import TokenIndex, build_index
from .spatial import SpatialIndex

ENV_PREFIX = "FOODMILES_"


@dataclass
class Config:
    producers_path: str | None = None
    recipes_path: str | None = None
    sites_path: str | None = None
    geocode_cache_path: str | None = None
    metric: str = geo.GREATCIRCLE
    max_radius_miles: float | None = None
    host: str = "127.0.0.1"
    port: int = 8000
    cors_origin: str | None = None


_FLOAT_FIELDS = {"max_radius_miles"}
_INT_FIELDS = {"port"}


def _coerce(name: str, value):
    if value is None:
        return None
    try:
        if name in _FLOAT_FIELDS:
            return float(value)
        if name in _INT_FIELDS:
            return int(value)
    except (TypeError, ValueError):
        raise ValueError(f"config field {name!r}: cannot parse {value!r}")
    return value


def load_config(
    config_path: str | None = None,
    env: dict | None = None,
    overrides: dict | None = None,
) -> Config:
    """Resolve settings from file, environment, and explicit overrides."""
    names = [f.name for f in dataclasses.fields(Config)]
    values = {f.name: f.default for f in dataclasses.fields(Config)}
    if config_path is not None:
        with open(config_path, encoding="utf-8") as fh:
            raw = json.load(fh)
        if not isinstance(raw, dict):
            raise ValueError(f"config file {config_path!r} must hold a JSON object")
        for key, value in raw.items():
            if key not in names:
                raise ValueError(f"unknown config key {key!r} in {config_path!r}")
            values[key] = _coerce(key, value)
    env = os.environ if env is None else env
    for name in names:
        var = ENV_PREFIX + name.upper()
        if var in env:
            values[name] = _coerce(name, env[var])
    for key, value in (overrides or {}).items():
        if key not in names:
            raise ValueError(f"unknown config override {key!r}")
        if value is not None:
            values[key] = _coerce(key, value)
    config = Config(**values)
    if config.metric not in geo.METRICS:
        raise ValueError(f"metric must be one of {geo.METRICS}, got {config.metric!r}")
    if config.max_radius_miles is not None and config.max_radius_miles <= 0:
        raise ValueError(f"max_radius_miles must be positive, got {config.max_radius_miles}")
    if not 0 < config.port < 65536:
        raise ValueError(f"port out of range: {config.port}")
    return config


@dataclass
class LoadReport:
    producers_kept: int = 0
    producers_rejected: int = 0
    producers_dropped: int = 0
    recipes_kept: int = 0
    recipes_skipped: int = 0
    sites_kept: int = 0
    sites_rejected: int = 0
    sites_dropped: int = 0


class Bundle:
    """Loaded datasets plus the indexes built over them."""

    def __init__(
        self,
        producers: list[Producer],
        recipes: list[Recipe],
        sites: list[Site],
        report: LoadReport,
    ):
        self.producers = producers
        self.recipes = recipes
        self.sites = sites
        self.report = report
        self.recipes_by_id = {r.id: r for r in recipes}
        self.index: TokenIndex = build_index(producers)
        self._spatial: dict[str, SpatialIndex] = {}

    def spatial(self, metric: str) -> SpatialIndex:
        if metric not in self._spatial:
            self._spatial[metric] = SpatialIndex(
                [(p.id, p.location) for p in self.producers], metric=metric
            )
        return self._spatial[metric]


def load_bundle(config: Config, need_sites: bool = False) -> Bundle:
    """Parse, filter, and index the datasets named by the config."""
    if config.producers_path is None:
        raise ValueError("no producers dataset configured")
    if config.recipes_path is None:
        raise ValueError("no recipes dataset configured")
    if need_sites and config.sites_path is None:
        raise ValueError("no sites dataset configured")
    report = LoadReport()
    cache = None
    if config.geocode_cache_path is not None:
        cache = GeocodeCache(config.geocode_cache_path)
    parsed = parse_producers(config.producers_path, cache=cache)
    producers, report.producers_dropped = filter_conterminous(parsed.producers)
    report.producers_rejected = len(parsed.rejects)
    report.producers_kept = len(producers)
    recipes_parsed = parse_recipes(config.recipes_path)
    recipes = recipes_parsed.recipes
    report.recipes_kept = len(recipes)
    report.recipes_skipped = recipes_parsed.skipped_blank
    sites: list[Site] = []
    if config.sites_path is not None:
        sites_parsed = parse_sites(config.sites_path, cache=cache)
        sites, report.sites_dropped = filter_conterminous(sites_parsed.sites)
        report.sites_rejected = len(sites_parsed.rejects)
        report.sites_kept = len(sites)
    return Bundle(producers, recipes, sites, report)
