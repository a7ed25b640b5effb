"""Shared fixtures: a classic-ticket catalog and dataset file writers.

The four producers sit due north of the site at latitudes chosen so the
great-circle distances land on 12.6 / 4.6 / 3.2 / 22.0 miles, the mile
values of the canonical five-ingredient ticket.  fsum of the four is
exactly 42.4.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import pytest

from foodmiles import (
    GeoPoint,
    Producer,
    Recipe,
    SpatialIndex,
    TokenIndex,
    build_index,
    build_spatial,
)

SITE = GeoPoint(34.1550, -118.4690)
FIXTURE_LON = -118.4690

# Latitudes back-solved from the haversine formula for the target miles.
BASIL_TOMATO_LAT = 34.33736001360636  # 12.6 mi
BREAD_LAT = 34.22157587798328  # 4.6 mi
MILK_LAT = 34.20131365424923  # 3.2 mi
YEAST_LAT = 34.47340637296348  # 22.0 mi

TICKET_INGREDIENTS = ("basil", "tomatoes", "wheat bread", "milk", "yeast")

# ingredient -> (supplier id, miles)
TICKET_EXPECTED = {
    "basil": ("farm-a", 12.6),
    "tomatoes": ("farm-a", 12.6),
    "wheat bread": ("farm-b", 4.6),
    "milk": ("farm-c", 3.2),
    "yeast": ("farm-d", 22.0),
}

TICKET_TOTAL = 42.4


def table1_producers() -> list[Producer]:
    return [
        Producer(
            id="farm-a",
            name="Verdant Hills Farm",
            address="4501 Canyon Rd, Agoura Hills, CA",
            cat_name="Herbs",
            category="Produce",
            item_list="Basil; Tomatoes",
            location=GeoPoint(BASIL_TOMATO_LAT, FIXTURE_LON),
        ),
        Producer(
            id="farm-b",
            name="Stonewheel Bakery",
            address="812 Mill St, Burbank, CA",
            cat_name="Bakery",
            category="Grain Goods",
            item_list="Wheat Loaf Bread",
            location=GeoPoint(BREAD_LAT, FIXTURE_LON),
        ),
        Producer(
            id="farm-c",
            name="Arroyo Dairy",
            address="77 Creamery Way, Glendale, CA",
            cat_name="Dairy",
            category="Animal Goods",
            item_list="Cow's milk",
            location=GeoPoint(MILK_LAT, FIXTURE_LON),
        ),
        Producer(
            id="farm-d",
            name="Ferment Works",
            address="19 Culture Blvd, Santa Clarita, CA",
            cat_name="Flavorings",
            category="Processed Goods",
            item_list="Yeast Extract Type Flavor O.S. (AU0179)",
            location=GeoPoint(YEAST_LAT, FIXTURE_LON),
        ),
    ]


def table1_recipe() -> Recipe:
    return Recipe(id="recipe-1", cuisine="American", ingredients=TICKET_INGREDIENTS)


@dataclass
class Scenario:
    site: GeoPoint
    producers: list[Producer]
    recipe: Recipe
    index: TokenIndex
    spatial: SpatialIndex


@pytest.fixture
def ticket_scenario() -> Scenario:
    producers = table1_producers()
    return Scenario(
        site=SITE,
        producers=producers,
        recipe=table1_recipe(),
        index=build_index(producers),
        spatial=build_spatial([(p.id, p.location) for p in producers]),
    )


PRODUCER_HEADER = [
    "name",
    "address",
    "ci_nopCatName",
    "ci_nopCategory",
    "ci_itemList",
    "latitude",
    "longitude",
]


def write_producers_csv(path: Path, rows: list[list[str]], header: list[str] | None = None) -> Path:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(PRODUCER_HEADER if header is None else header)
        writer.writerows(rows)
    return path


def producer_rows(producers: list[Producer]) -> list[list[str]]:
    return [
        [
            p.name,
            p.address,
            p.cat_name,
            p.category,
            p.item_list,
            repr(p.location.lat),
            repr(p.location.lon),
        ]
        for p in producers
    ]


def write_sites_csv(path: Path, rows: list[list[str]]) -> Path:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "address", "lat", "lon"])
        writer.writerows(rows)
    return path


def write_recipes_tsv(path: Path, recipes: list[tuple[str, ...]]) -> Path:
    """Each entry is (cuisine, ingredient, ingredient, ...)."""
    with open(path, "w", encoding="utf-8") as fh:
        for fields in recipes:
            fh.write("\t".join(fields) + "\n")
    return path


@dataclass
class DatasetDir:
    root: Path
    producers: Path
    recipes: Path
    sites: Path


@pytest.fixture
def dataset_dir(tmp_path) -> DatasetDir:
    """The ticket scenario written out as dataset files."""
    producers = write_producers_csv(tmp_path / "producers.csv", producer_rows(table1_producers()))
    recipes = write_recipes_tsv(
        tmp_path / "recipes.tsv",
        [
            ("American",) + TICKET_INGREDIENTS,
            ("American", "milk", "basil"),
            ("American", "dragon fruit", "milk"),
        ],
    )
    sites = write_sites_csv(
        tmp_path / "sites.csv",
        [["site-1", "6200 Market Ave, Sherman Oaks, CA", repr(SITE.lat), repr(SITE.lon)]],
    )
    return DatasetDir(root=tmp_path, producers=producers, recipes=recipes, sites=sites)


@pytest.fixture(scope="session")
def corpus(tmp_path_factory):
    """Full-cardinality generated corpus, built once per session."""
    from corpusgen import write_corpus

    return write_corpus(tmp_path_factory.mktemp("corpus"))
