"""Deterministic synthetic corpus at the full snapshot cardinalities.

15,490 producer rows (all valid, all conterminous), 35,162 recipe
lines, and 457 site rows of which exactly 3 (Honolulu, Anchorage,
San Juan) fall outside the conterminous box.  Vocabulary words end in
safe consonants so the plural fold maps "word"+"s" back to "word",
keeping match behavior predictable without hand-listing tokens.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from pathlib import Path

PRODUCER_ROWS = 15490
RECIPE_ROWS = 35162
SITE_ROWS = 457

_SEED = 20160915

_CONS = "bdfgklmnprtv"
_VOW = "aiou"
_FINAL = "bdgklmnprt"

_OUTSIDE = [
    ("site-hi", "1 Mall Rd, Honolulu, HI", 21.3069, -157.8583),
    ("site-ak", "2 Harbor Ave, Anchorage, AK", 61.2181, -149.9003),
    ("site-pr", "3 Plaza St, San Juan, PR", 18.4655, -66.1057),
]


def _word(rng: random.Random) -> str:
    syllables = rng.choice((2, 3))
    body = "".join(rng.choice(_CONS) + rng.choice(_VOW) for _ in range(syllables))
    return body + rng.choice(_FINAL)


def _unique_words(rng: random.Random, count: int) -> list[str]:
    words: list[str] = []
    seen: set[str] = set()
    while len(words) < count:
        w = _word(rng)
        if w not in seen:
            seen.add(w)
            words.append(w)
    return words


@dataclass
class CorpusInfo:
    producers_path: Path
    recipes_path: Path
    sites_path: Path
    producer_rows: int
    recipe_rows: int
    site_rows: int
    sites_outside: int
    site_lat: float
    site_lon: float


def write_corpus(root: Path) -> CorpusInfo:
    rng = random.Random(_SEED)
    pool = _unique_words(rng, 680)
    ingredient_words = pool[:600]
    category_words = pool[600:668]
    ghost_words = pool[668:]

    cat_names = [f"{rng.choice(category_words)} {rng.choice(category_words)}" for _ in range(24)]
    categories = [rng.choice(category_words) for _ in range(12)]

    producers_path = root / "producers.csv"
    with open(producers_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["name", "address", "ci_nopCatName", "ci_nopCategory", "ci_itemList", "latitude", "longitude"]
        )
        for i in range(PRODUCER_ROWS):
            items = []
            for w in rng.sample(ingredient_words, rng.randint(3, 8)):
                shown = w + "s" if rng.random() < 0.4 else w
                if rng.random() < 0.3:
                    shown = "Organic " + shown
                items.append(shown.capitalize() if shown[0].islower() else shown)
            writer.writerow(
                [
                    f"Farm {i + 1}",
                    f"{i + 1} Rural Route, Plainfield",
                    rng.choice(cat_names),
                    rng.choice(categories),
                    "; ".join(items),
                    repr(rng.uniform(25.0, 49.0)),
                    repr(rng.uniform(-124.0, -68.0)),
                ]
            )

    recipes_path = root / "recipes.tsv"
    with open(recipes_path, "w", encoding="utf-8") as fh:
        for _ in range(RECIPE_ROWS):
            phrases = []
            for _ in range(rng.randint(3, 12)):
                roll = rng.random()
                if roll < 0.05:
                    phrases.append(rng.choice(ghost_words))
                elif roll < 0.15:
                    phrases.append("organic " + rng.choice(ingredient_words))
                elif roll < 0.30:
                    phrases.append(rng.choice(ingredient_words) + "s")
                else:
                    phrases.append(rng.choice(ingredient_words))
            fh.write("American\t" + "\t".join(phrases) + "\n")

    sites_path = root / "sites.csv"
    with open(sites_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "address", "lat", "lon"])
        for i in range(SITE_ROWS - len(_OUTSIDE)):
            writer.writerow(
                [
                    f"site-{i + 1}",
                    f"{i + 1} Market St, Plainfield",
                    repr(rng.uniform(25.0, 49.0)),
                    repr(rng.uniform(-124.0, -68.0)),
                ]
            )
        for sid, address, lat, lon in _OUTSIDE:
            writer.writerow([sid, address, repr(lat), repr(lon)])

    return CorpusInfo(
        producers_path=producers_path,
        recipes_path=recipes_path,
        sites_path=sites_path,
        producer_rows=PRODUCER_ROWS,
        recipe_rows=RECIPE_ROWS,
        site_rows=SITE_ROWS,
        sites_outside=len(_OUTSIDE),
        site_lat=39.0,
        site_lon=-98.0,
    )
