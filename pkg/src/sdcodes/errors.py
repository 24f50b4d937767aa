"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An operation was given arguments outside its mathematical domain."""


class ParseError(ValueError):
    """Malformed textual input (hex vectors, matrix files, record lines)."""


class ConstructionError(ValueError):
    """The bordered construction's conditions failed; carries the report."""

    def __init__(self, report):
        self.report = report
        failed = [name for name, ok in report.as_dict().items() if not ok]
        super().__init__("construction conditions failed: " + ", ".join(failed))


class CensusError(RuntimeError):
    """The census could not run, e.g. an information set complement is singular."""
