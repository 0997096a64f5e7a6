"""CLI package for ris-user-selection."""
