"""Exact computations for group-categories and homology field theories."""

__version__ = "0.1.0"
