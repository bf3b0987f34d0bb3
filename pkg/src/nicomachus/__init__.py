"""Exact verification toolkit for a balanced three-term Nicomachean identity."""

__version__ = "0.1.0"
