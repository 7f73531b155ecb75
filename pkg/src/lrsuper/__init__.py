"""Exact computations with Lie-Rinehart superalgebras given by structure constants."""

__version__ = "0.1.0"
