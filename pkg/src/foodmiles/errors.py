"""Exception types shared across the package."""


class FoodMilesError(Exception):
    """Base class for all errors raised by this package."""


class MissingColumnError(FoodMilesError):
    """A required column is absent from a CSV header."""

    def __init__(self, column: str):
        super().__init__(f"required column missing from header: {column!r}")
        self.column = column


class CacheMissNoResolverError(FoodMilesError):
    """Address not in the geocode cache and no resolver is configured."""

    def __init__(self, address: str):
        super().__init__(f"address not in geocode cache and no resolver configured: {address!r}")
        self.address = address


class ResolverFailureError(FoodMilesError):
    """The external geocode resolver failed for an address."""

    def __init__(self, address: str, cause: Exception):
        super().__init__(f"geocode resolver failed for {address!r}: {cause}")
        self.address = address
        self.cause = cause


class EmptyIndexError(FoodMilesError):
    """Nearest-neighbor query against an index with no points."""


class NoCandidateInIndexError(FoodMilesError):
    """None of the requested candidate ids exist in the spatial index."""


class NoProducerInRadiusError(FoodMilesError):
    """The nearest producer lies beyond the configured radius."""

    def __init__(self, nearest_miles: float, max_radius: float):
        super().__init__(
            f"nearest producer at {nearest_miles:.1f} mi exceeds radius {max_radius:.1f} mi"
        )
        self.nearest_miles = nearest_miles
        self.max_radius = max_radius


class EmptyRecipeError(FoodMilesError):
    """A sourcing request carried no usable ingredient phrases."""


class NoEligibleRecipeError(FoodMilesError):
    """Every recipe was excluded by the active recommendation policy."""
