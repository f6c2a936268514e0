"""Exact character-theoretic verification toolkit for desk-scale groups."""

__version__ = "0.1.0"
