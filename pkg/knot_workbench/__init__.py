"""Knot projection workbench: spherical curves, Reidemeister-type moves and relation audits."""

__version__ = "0.1.0"
