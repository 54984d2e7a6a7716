"""Exact polyhedral-divisor presentations of toric Cox rings."""

__version__ = "0.1.0"
