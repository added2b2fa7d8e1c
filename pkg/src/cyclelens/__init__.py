"""Graphs in which no two cycles share a length."""

__version__ = "0.1.0"
