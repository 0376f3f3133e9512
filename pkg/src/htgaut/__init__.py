"""Honeycomb toroidal graphs and their automorphism groups."""

__version__ = "0.1.0"
