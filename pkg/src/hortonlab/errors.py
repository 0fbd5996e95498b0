"""Shared exception types."""


class ResourceLimitError(Exception):
    """An operation would exceed a configured resource cap (max k, max n)."""


class PointFileError(ValueError):
    """A point-set file is malformed."""
