"""Per-realization evaluation of the compared transmission schemes."""

from ris_selection.schemes.runner import SchemeRunner, SchemeStreams

__all__ = ["SchemeRunner", "SchemeStreams"]
