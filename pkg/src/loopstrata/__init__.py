"""Exact combinatorics of affine alcoves, parahorics and twisted chains."""

__version__ = "0.1.0"
