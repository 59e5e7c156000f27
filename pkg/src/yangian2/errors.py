"""Shared exception types."""


class DegreeCapError(ValueError):
    """A computation produced a term above the configured degree cap."""


class OrderCapError(ValueError):
    """A series operation was asked for coefficients beyond its order."""
