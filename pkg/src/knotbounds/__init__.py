"""Knot polynomial values, double-branched-cover algebra and unknotting bounds."""

__version__ = "0.1.0"
