"""Exact workbench for enumerative-geometry integer sequences."""

__version__ = "0.1.0"
