"""Shared exception types."""


class CapExceeded(RuntimeError):
    """An enumeration would produce more elements than the configured cap."""
