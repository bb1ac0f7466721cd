"""Reduced Collatz map: root classification, shortcut iterations and cycle-gap analysis."""

__version__ = "0.1.0"
