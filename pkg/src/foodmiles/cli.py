"""Command-line front door: ingest, ticket, recommend, serve.

Data goes to stdout, diagnostics to stderr.  Exit codes are contract:
2 bad input (missing files, invalid coordinates, bad config), 1 zero
usable records after ingestion, 3 unknown recipe id, 4 no eligible
recipe.
"""

from __future__ import annotations

import json
import os
import socket
import sys
import time

import click

from . import geo
from .config import Bundle, Config, load_bundle, load_config
from .errors import FoodMilesError, NoEligibleRecipeError
from .recommender import normalize_policy, recommend as rank_recipes
from .sourcing import match_all, render_ticket_text, source_recipe, ticket_to_dict, ticket_to_geojson


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _dataset_options(command):
    decorators = [
        click.option("--config", "config_path", type=click.Path(), default=None,
                     help="JSON config file; flags override it."),
        click.option("--producers", "producers_path", type=click.Path(), default=None,
                     help="Producer snapshot CSV."),
        click.option("--recipes", "recipes_path", type=click.Path(), default=None,
                     help="Recipe corpus (TSV or CSV)."),
        click.option("--sites", "sites_path", type=click.Path(), default=None,
                     help="Production-site CSV."),
        click.option("--geocode-cache", "geocode_cache_path", type=click.Path(), default=None,
                     help="Address-to-coordinate cache CSV."),
        click.option("--metric", type=click.Choice(list(geo.METRICS)), default=None,
                     help="Distance metric."),
        click.option("--max-radius", "max_radius_miles", type=float, default=None,
                     help="Maximum sourcing radius in miles."),
    ]
    for decorator in reversed(decorators):
        command = decorator(command)
    return command


def _resolve(config_path: str | None, **overrides) -> Config:
    try:
        return load_config(config_path, overrides={k: v for k, v in overrides.items() if v is not None})
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        _fail(str(exc), 2)


def _load(config: Config, need_sites: bool = False) -> Bundle:
    paths = [("producers", config.producers_path), ("recipes", config.recipes_path)]
    if need_sites:
        paths.append(("sites", config.sites_path))
    elif config.sites_path is not None:
        paths.append(("sites", config.sites_path))
    for label, path in paths:
        if path is None:
            _fail(f"no {label} dataset configured", 2)
        if not os.path.isfile(path):
            _fail(f"{label} file not found: {path}", 2)
    try:
        return load_bundle(config, need_sites=need_sites)
    except (FoodMilesError, OSError, ValueError) as exc:
        _fail(str(exc), 2)


def _site(lat: float, lon: float) -> geo.GeoPoint:
    try:
        return geo.GeoPoint(lat, lon)
    except ValueError as exc:
        _fail(str(exc), 2)


@click.group()
def main():
    """Source recipe ingredients from nearby organic producers."""


@main.command()
@_dataset_options
def ingest(config_path, **flags):
    """Validate the datasets and print kept/rejected/dropped counts."""
    config = _resolve(config_path, **flags)
    bundle = _load(config, need_sites=True)
    r = bundle.report
    click.echo(f"producers: {r.producers_kept} kept, {r.producers_rejected} rejected, {r.producers_dropped} dropped")
    click.echo(f"recipes: {r.recipes_kept} kept, {r.recipes_skipped} skipped")
    click.echo(f"sites: {r.sites_kept} kept, {r.sites_rejected} rejected, {r.sites_dropped} dropped")
    if min(r.producers_kept, r.recipes_kept, r.sites_kept) == 0:
        _fail("a dataset produced zero usable records", 1)


@main.command()
@click.option("--lat", type=float, required=True)
@click.option("--lon", type=float, required=True)
@click.option("--recipe-id", default=None, help="Recipe from the corpus.")
@click.option("--ingredients", default=None, help='Comma-separated phrases, e.g. "basil,tomatoes".')
@click.option("--map", "map_path", type=click.Path(), default=None,
              help="Also write the supplier map as GeoJSON.")
@click.option("--format", "fmt", type=click.Choice(["tsv", "json"]), default="tsv", show_default=True)
@_dataset_options
def ticket(lat, lon, recipe_id, ingredients, map_path, fmt, config_path, **flags):
    """Print the sourcing ticket for one recipe at one site."""
    config = _resolve(config_path, **flags)
    site = _site(lat, lon)
    if (recipe_id is None) == (ingredients is None):
        _fail("pass exactly one of --recipe-id or --ingredients", 2)
    phrases = None
    if ingredients is not None:
        phrases = tuple(s.strip() for s in ingredients.split(",") if s.strip())
        if not phrases:
            _fail("--ingredients is empty", 2)
    bundle = _load(config)
    if recipe_id is not None:
        recipe = bundle.recipes_by_id.get(recipe_id)
        if recipe is None:
            _fail(f"unknown recipe id {recipe_id!r}", 3)
    else:
        from .ingest import Recipe

        recipe = Recipe(id="custom", cuisine="", ingredients=phrases)
    spatial = bundle.spatial(config.metric)
    result = source_recipe(site, recipe, bundle.index, spatial, config.max_radius_miles)
    if map_path is not None:
        candidates = match_all(recipe, bundle.index)
        doc = ticket_to_geojson(result, candidates, bundle.index.producers, config.metric)
        with open(map_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
    if fmt == "json":
        click.echo(json.dumps(ticket_to_dict(result), indent=2))
    else:
        click.echo(render_ticket_text(result), nl=False)


@main.command()
@click.option("--lat", type=float, required=True)
@click.option("--lon", type=float, required=True)
@click.option("--k", type=int, default=10, show_default=True)
@click.option("--policy", default="exclude", show_default=True,
              type=click.Choice(["exclude", "allow", "exclude-incomplete", "allow-incomplete"]))
@click.option("--stats", is_flag=True, help="Report wall clock and spatial query count on stderr.")
@_dataset_options
def recommend(lat, lon, k, policy, stats, config_path, **flags):
    """Rank corpus recipes by total food miles at a site."""
    config = _resolve(config_path, **flags)
    site = _site(lat, lon)
    if k < 1:
        _fail(f"--k must be >= 1, got {k}", 2)
    bundle = _load(config)
    spatial = bundle.spatial(config.metric)
    started = time.perf_counter()
    queries_before = spatial.query_count
    try:
        ranked = rank_recipes(
            site,
            bundle.recipes,
            bundle.index,
            spatial,
            k=k,
            policy=normalize_policy(policy),
            max_radius=config.max_radius_miles,
        )
    except NoEligibleRecipeError as exc:
        _fail(str(exc), 4)
    elapsed = time.perf_counter() - started
    click.echo("recipe_id\ttotal_food_miles\tsourced\tmissing")
    for rec in ranked:
        click.echo(f"{rec.recipe_id}\t{rec.total_food_miles:.1f}\t{rec.sourced_count}\t{rec.missing_count}")
    if stats:
        click.echo(
            f"stats: wall_clock_seconds={elapsed:.3f} spatial_queries={spatial.query_count - queries_before}",
            err=True,
        )


@main.command()
@click.option("--host", default=None, help="Override the configured listen address.")
@click.option("--port", type=int, default=None, help="Override the configured port.")
@_dataset_options
def serve(host, port, config_path, **flags):
    """Run the HTTP service until interrupted."""
    overrides = dict(flags)
    if host is not None:
        overrides["host"] = host
    if port is not None:
        overrides["port"] = port
    config = _resolve(config_path, **overrides)
    bundle = _load(config)
    # Surface port conflicts as a clean exit instead of a traceback.
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((config.host, config.port))
    except OSError as exc:
        _fail(f"cannot bind {config.host}:{config.port}: {exc}", 2)
    finally:
        probe.close()
    import uvicorn

    from .service import create_app

    app = create_app(config, bundle)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
