"""Terminal output formatters."""

from ris_selection.formatters.table import TableFormatter

__all__ = ["TableFormatter"]
