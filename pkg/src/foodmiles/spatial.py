"""Exact nearest-producer queries with optional candidate and radius limits.

Great-circle mode keys a k-d tree on 3D unit-sphere embeddings: chord
distance is strictly monotone in central angle, so tree pruning is exact
without evaluating haversine inside the traversal.  Planar mode keys a
2D tree on raw degrees, whose Euclidean distance brackets the planar
metric within a cos(latitude) factor; a conservatively inflated ball
re-rank restores exactness.  Final distances and tie-breaks are always
computed with the same scalar functions a brute-force scan would use,
so index answers agree with a linear scan bit-for-bit.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import cKDTree

from . import geo
from .errors import EmptyIndexError, NoCandidateInIndexError, NoProducerInRadiusError
from .geo import GeoPoint, Miles

# Below this candidate-set size a direct scan beats tree traversal.
BRUTE_FORCE_THRESHOLD = 64

# Relative slack when collecting near-ties around the tree's best hit.
_TIE_EPS = 1e-9


class SpatialIndex:
    """Immutable nearest-neighbor index over (producer id, GeoPoint) pairs.

    `query_count` tallies nearest() calls for performance instrumentation;
    it is the only mutable state and is not part of any answer.
    """

    def __init__(self, producers: Sequence[tuple[str, GeoPoint]], metric: str = geo.GREATCIRCLE):
        if metric not in geo.METRICS:
            raise ValueError(f"unknown metric: {metric!r}")
        self.metric = metric
        self.ids: list[str] = []
        points: list[GeoPoint] = []
        seen: set[str] = set()
        for pid, point in producers:
            if pid in seen:
                raise ValueError(f"duplicate producer id: {pid!r}")
            seen.add(pid)
            self.ids.append(pid)
            points.append(point)
        self._points = points
        self._row_of = {pid: row for row, pid in enumerate(self.ids)}
        if metric == geo.GREATCIRCLE:
            embed = np.array([geo.unit_vector(p) for p in points], dtype=np.float64).reshape(-1, 3)
        else:
            embed = np.array([(p.lat, p.lon) for p in points], dtype=np.float64).reshape(-1, 2)
        self._max_abs_lat = max((abs(p.lat) for p in points), default=0.0)
        self._tree = cKDTree(embed) if len(points) else None
        self.query_count = 0

    def __len__(self) -> int:
        return len(self.ids)

    def location_of(self, pid: str) -> GeoPoint:
        return self._points[self._row_of[pid]]

    def _embed_query(self, query: GeoPoint) -> np.ndarray:
        if self.metric == geo.GREATCIRCLE:
            return np.array(geo.unit_vector(query), dtype=np.float64)
        return np.array((query.lat, query.lon), dtype=np.float64)

    def _ball_radius(self, query: GeoPoint, hit: float) -> float:
        # Radius in embedding space guaranteed to contain every point whose
        # metric distance could still undercut the hit's.
        if self.metric == geo.GREATCIRCLE:
            return hit * (1.0 + _TIE_EPS) + 1e-12
        bound = min(max(abs(query.lat), self._max_abs_lat), 89.9999)
        c_min = math.cos(math.radians(bound))
        return hit / c_min * (1.0 + _TIE_EPS) + 1e-12

    def _best_of_rows(self, query: GeoPoint, rows: Iterable[int]) -> tuple[str, Miles]:
        best: tuple[Miles, str] | None = None
        for row in rows:
            d = geo.distance_miles(query, self._points[row], self.metric)
            key = (d, self.ids[row])
            if best is None or key < best:
                best = key
        assert best is not None
        return best[1], best[0]

    def nearest(
        self,
        query: GeoPoint,
        candidates: Iterable[str] | None = None,
        max_radius: Miles | None = None,
    ) -> tuple[str, Miles]:
        """Closest producer to `query`, optionally restricted to `candidates`.

        Ties break toward the smallest producer id.  With `max_radius`,
        a minimum beyond the radius raises NoProducerInRadiusError.
        """
        self.query_count += 1
        if self._tree is None:
            raise EmptyIndexError("spatial index is empty")

        if candidates is not None:
            candidate_rows = [self._row_of[pid] for pid in candidates if pid in self._row_of]
            if not candidate_rows:
                raise NoCandidateInIndexError("no candidate id exists in the index")
            if len(candidate_rows) < BRUTE_FORCE_THRESHOLD:
                pid, dist = self._best_of_rows(query, candidate_rows)
            else:
                pid, dist = self._tree_nearest(query, set(candidate_rows))
        else:
            pid, dist = self._tree_nearest(query, None)

        if max_radius is not None and dist > max_radius:
            raise NoProducerInRadiusError(dist, max_radius)
        return pid, dist

    def _tree_nearest(self, query: GeoPoint, candidate_rows: set[int] | None) -> tuple[str, Miles]:
        q = self._embed_query(query)
        n = len(self.ids)
        if candidate_rows is None:
            hit, _ = self._tree.query(q, k=1)
        else:
            hit = None
            k = BRUTE_FORCE_THRESHOLD
            while hit is None:
                k = min(k, n)
                dists, rows = self._tree.query(q, k=k)
                for d, row in zip(np.atleast_1d(dists), np.atleast_1d(rows)):
                    if row < n and int(row) in candidate_rows:
                        hit = float(d)
                        break
                if hit is None:
                    if k == n:
                        raise AssertionError("candidate rows exist but were never reached")
                    k *= 4
        ball = self._tree.query_ball_point(q, self._ball_radius(query, float(hit)))
        rows = ball if candidate_rows is None else [r for r in ball if r in candidate_rows]
        return self._best_of_rows(query, rows)


def build_spatial(producers: Sequence[tuple[str, GeoPoint]], metric: str = geo.GREATCIRCLE) -> SpatialIndex:
    """Build an immutable index; ids must be unique."""
    return SpatialIndex(producers, metric)


def nearest(
    index: SpatialIndex,
    query: GeoPoint,
    candidates: Iterable[str] | None = None,
    max_radius: Miles | None = None,
) -> tuple[str, Miles]:
    """Function form of SpatialIndex.nearest."""
    return index.nearest(query, candidates=candidates, max_radius=max_radius)
