"""Cusped spaces and compactly supported cohomology for group pairs."""

__version__ = "0.1.0"
