"""Exact-arithmetic verification toolkit for hypersurface automorphism bounds."""

__version__ = "0.1.0"
