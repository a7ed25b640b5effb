"""Token normalization and the inverted index over producer product fields.

A producer matches an ingredient phrase when every normalized token of
the phrase appears in a single one of its three product-description
fields.  Token-level matching plus a minimal plural fold is deliberately
conservative: "corn" never matches "cornish hen", and "olive oil" never
matches a producer listing olives and sunflower oil in different fields.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .ingest import Producer

# Three product fields, in the priority order used to report the matched
# product text on tickets.
FIELDS = ("cat_name", "category", "item_list")

_NON_LETTER = re.compile(r"[^a-z]+")


def _fold_plural(token: str) -> str:
    # Minimal suffix scheme; a full stemmer would introduce matches we
    # could not explain from the data.
    if token.endswith("ies") and len(token) > 3:
        return token[:-3] + "y"
    if token.endswith("es"):
        stem = token[:-2]
        if stem.endswith(("s", "x", "z", "ch", "sh", "o")):
            return stem
    if token.endswith("s") and not token.endswith("ss"):
        return token[:-1]
    return token


def normalize(token: str) -> str:
    """Lowercase, strip punctuation/digits to spaces, fold plurals, trim.

    May return an empty string (e.g. for "0%"); callers skip empties.
    """
    lowered = _NON_LETTER.sub(" ", token.lower())
    return " ".join(w for w in (_fold_plural(word) for word in lowered.split()) if w)


def tokens(text: str) -> list[str]:
    """Normalized word list of a phrase or product field."""
    return normalize(text).split()


@dataclass(frozen=True)
class MatchResult:
    """Producers matching one ingredient phrase.

    matched_field records, per producer, the first field (in FIELDS
    order) in which all phrase tokens co-occurred.
    """

    ingredient: str
    producer_ids: tuple[str, ...]
    matched_field: Mapping[str, str]


class TokenIndex:
    """Immutable inverted index: per-field token -> sorted producer ids."""

    def __init__(self, postings: dict[str, dict[str, tuple[str, ...]]], producers: dict[str, Producer]):
        self.postings = postings
        self.producers = producers

    def __len__(self) -> int:
        return len(self.producers)


def build_index(catalog: Sequence[Producer]) -> TokenIndex:
    """Build the inverted index over a producer catalog (ids must be unique)."""
    sets: dict[str, dict[str, set[str]]] = {f: {} for f in FIELDS}
    producers: dict[str, Producer] = {}
    for producer in catalog:
        if producer.id in producers:
            raise ValueError(f"duplicate producer id: {producer.id!r}")
        producers[producer.id] = producer
        for field in FIELDS:
            field_postings = sets[field]
            for token in set(tokens(getattr(producer, field))):
                field_postings.setdefault(token, set()).add(producer.id)
    postings = {
        field: {token: tuple(sorted(ids)) for token, ids in field_postings.items()}
        for field, field_postings in sets.items()
    }
    return TokenIndex(postings, producers)


def match_ingredient(phrase: str, index: TokenIndex) -> MatchResult:
    """Find producers offering a phrase: all tokens within a single field."""
    phrase_tokens = tokens(phrase)
    matched_field: dict[str, str] = {}
    if phrase_tokens:
        for field in FIELDS:
            field_postings = index.postings[field]
            candidate_lists = [field_postings.get(t) for t in phrase_tokens]
            if any(ids is None for ids in candidate_lists):
                continue
            candidate_lists.sort(key=len)
            hits = set(candidate_lists[0])
            for ids in candidate_lists[1:]:
                hits &= set(ids)
                if not hits:
                    break
            for pid in hits:
                # earlier fields win; later fields only fill gaps
                matched_field.setdefault(pid, field)
    return MatchResult(
        ingredient=phrase,
        producer_ids=tuple(sorted(matched_field)),
        matched_field=matched_field,
    )
