"""Dataset parsing: producer catalog, recipe corpus, and site list.

Rows that cannot be used (bad coordinates, empty product fields) are
collected into a rejects report rather than dropped silently, so kept +
rejected always accounts for every input row.  Address resolution goes
through a pluggable geocoder backed by a persistent file cache; the
cache is consulted first and the live resolver is optional, so a build
never needs network access.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence, TypeVar

from .errors import CacheMissNoResolverError, MissingColumnError, ResolverFailureError
from .geo import GeoPoint, in_conterminous_us

# Default producer CSV column names, as found in the upstream catalog export.
PRODUCER_COLUMNS = {
    "name": "name",
    "address": "address",
    "cat_name": "ci_nopCatName",
    "category": "ci_nopCategory",
    "item_list": "ci_itemList",
    "lat": "latitude",
    "lon": "longitude",
    "id": None,  # optional; falls back to "producer-<row>"
}

SITE_COLUMNS = {"id": "id", "address": "address", "lat": "lat", "lon": "lon"}


@dataclass(frozen=True)
class Producer:
    """One certified-organic operation with its three product-description fields."""

    id: str
    name: str
    address: str
    cat_name: str
    category: str
    item_list: str
    location: GeoPoint


@dataclass(frozen=True)
class Recipe:
    """A cuisine-labelled, ordered list of ingredient phrases."""

    id: str
    cuisine: str
    ingredients: tuple[str, ...]
    name: str | None = None  # the source corpus carries no recipe names


@dataclass(frozen=True)
class Site:
    """A candidate production location (e.g. a supermarket)."""

    id: str
    address: str
    location: GeoPoint


@dataclass(frozen=True)
class RejectedRow:
    """A row that failed validation, with enough context to audit it."""

    line: int
    reason: str


@dataclass
class ProducerParseResult:
    producers: list[Producer]
    rejects: list[RejectedRow] = field(default_factory=list)


@dataclass
class RecipeParseResult:
    recipes: list[Recipe]
    skipped_blank: int = 0


@dataclass
class SiteParseResult:
    sites: list[Site]
    rejects: list[RejectedRow] = field(default_factory=list)


def _parse_point(lat_text: str, lon_text: str) -> GeoPoint:
    return GeoPoint(float(lat_text), float(lon_text))


def _require_columns(header: Sequence[str], wanted: Iterable[str]):
    present = set(header)
    for column in wanted:
        if column not in present:
            raise MissingColumnError(column)


class GeocodeCache:
    """Persistent address -> coordinate cache.

    Backed by a CSV file with columns normalized_address, lat, lon.
    Lookups are deterministic; writes append one row per new address.
    Concurrent reads are fine; writes follow a single-writer contract.
    """

    FIELDS = ("normalized_address", "lat", "lon")

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else None
        self._entries: dict[str, GeoPoint] = {}
        if self.path is not None and self.path.exists():
            with open(self.path, newline="", encoding="utf-8") as fh:
                reader = csv.DictReader(fh)
                _require_columns(reader.fieldnames or [], self.FIELDS)
                for row in reader:
                    self._entries[row["normalized_address"]] = _parse_point(row["lat"], row["lon"])

    @staticmethod
    def normalize_address(address: str) -> str:
        return re.sub(r"\s+", " ", address.strip()).lower()

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, address: str) -> GeoPoint | None:
        return self._entries.get(self.normalize_address(address))

    def put(self, address: str, point: GeoPoint):
        key = self.normalize_address(address)
        self._entries[key] = point
        if self.path is None:
            return
        new_file = not self.path.exists()
        with open(self.path, "a", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            if new_file:
                writer.writerow(self.FIELDS)
            # repr() round-trips floats losslessly
            writer.writerow([key, repr(point.lat), repr(point.lon)])
            fh.flush()


Resolver = Callable[[str], GeoPoint]


def geocode(address: str, cache: GeocodeCache, resolver: Resolver | None = None) -> GeoPoint:
    """Resolve an address to coordinates, cache first.

    A cache hit never touches the resolver.  A miss queries the resolver
    when one is configured, stores the result, and returns it; with no
    resolver the miss is an error.
    """
    if not address.strip():
        raise ValueError("address must be non-empty")
    hit = cache.get(address)
    if hit is not None:
        return hit
    if resolver is None:
        raise CacheMissNoResolverError(address)
    try:
        point = resolver(address)
    except Exception as exc:
        raise ResolverFailureError(address, exc) from exc
    cache.put(address, point)
    return point


def parse_producers(
    path: str | Path,
    columns: dict[str, str | None] | None = None,
    cache: GeocodeCache | None = None,
) -> ProducerParseResult:
    """Parse the producer catalog CSV.

    Rows whose coordinates cannot be parsed are recorded as rejects, not
    dropped; when a geocode cache is supplied, rows lacking coordinates
    fall back to a cache lookup by address before being rejected.  Rows
    with all three product fields empty are rejected as unmatched-able.
    """
    colmap = dict(PRODUCER_COLUMNS)
    if columns:
        colmap.update(columns)
    producers: list[Producer] = []
    rejects: list[RejectedRow] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = [colmap[k] for k in ("name", "address", "cat_name", "category", "item_list", "lat", "lon")]
        _require_columns(reader.fieldnames or [], required)
        id_column = colmap.get("id")
        if id_column is not None and id_column not in (reader.fieldnames or []):
            raise MissingColumnError(id_column)
        row_number = 0
        for row in reader:
            row_number += 1
            line = reader.line_num
            address = (row[colmap["address"]] or "").strip()
            try:
                point = _parse_point(row[colmap["lat"]] or "", row[colmap["lon"]] or "")
            except (TypeError, ValueError):
                cached = cache.get(address) if cache is not None and address else None
                if cached is None:
                    rejects.append(RejectedRow(line, "unparseable coordinates"))
                    continue
                point = cached
            cat_name = (row[colmap["cat_name"]] or "").strip()
            category = (row[colmap["category"]] or "").strip()
            item_list = (row[colmap["item_list"]] or "").strip()
            if not (cat_name or category or item_list):
                rejects.append(RejectedRow(line, "all product fields empty"))
                continue
            pid = (row[id_column] or "").strip() if id_column else ""
            producers.append(
                Producer(
                    id=pid or f"producer-{row_number}",
                    name=(row[colmap["name"]] or "").strip(),
                    address=address,
                    cat_name=cat_name,
                    category=category,
                    item_list=item_list,
                    location=point,
                )
            )
    return ProducerParseResult(producers, rejects)


def detect_delimiter(first_line: str) -> str:
    """Tab when the first line contains one, else comma."""
    return "\t" if "\t" in first_line else ","


def parse_recipes(path: str | Path, delimiter: str | None = None) -> RecipeParseResult:
    """Parse the recipe corpus: one recipe per line, cuisine first.

    Ids are "recipe-<1-based line number>"; blank lines are skipped and
    counted (their line numbers are still consumed).  The delimiter is
    auto-detected from the first line unless given.
    """
    recipes: list[Recipe] = []
    skipped = 0
    with open(path, encoding="utf-8") as fh:
        for line_number, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip():
                skipped += 1
                continue
            if delimiter is None:
                delimiter = detect_delimiter(line)
            fields = line.split(delimiter)
            cuisine = fields[0].strip()
            ingredients = tuple(p.strip().lower() for p in fields[1:] if p.strip())
            if not ingredients:
                skipped += 1
                continue
            recipes.append(Recipe(id=f"recipe-{line_number}", cuisine=cuisine, ingredients=ingredients))
    return RecipeParseResult(recipes, skipped)


def parse_sites(
    path: str | Path,
    columns: dict[str, str] | None = None,
    cache: GeocodeCache | None = None,
) -> SiteParseResult:
    """Parse the site CSV (id/address/lat/lon, header-mapped)."""
    colmap = dict(SITE_COLUMNS)
    if columns:
        colmap.update(columns)
    sites: list[Site] = []
    rejects: list[RejectedRow] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        _require_columns(reader.fieldnames or [], colmap.values())
        row_number = 0
        for row in reader:
            row_number += 1
            line = reader.line_num
            address = (row[colmap["address"]] or "").strip()
            try:
                point = _parse_point(row[colmap["lat"]] or "", row[colmap["lon"]] or "")
            except (TypeError, ValueError):
                cached = cache.get(address) if cache is not None and address else None
                if cached is None:
                    rejects.append(RejectedRow(line, "unparseable coordinates"))
                    continue
                point = cached
            sid = (row[colmap["id"]] or "").strip()
            sites.append(Site(id=sid or f"site-{row_number}", address=address, location=point))
    return SiteParseResult(sites, rejects)


Located = TypeVar("Located", Producer, Site)


def filter_conterminous(items: Sequence[Located]) -> tuple[list[Located], int]:
    """Keep records inside the conterminous-US box; return (kept, dropped count)."""
    kept = [item for item in items if in_conterminous_us(item.location)]
    return kept, len(items) - len(kept)
