"""Exact lower bounds on psc bordism ranks from low-degree delocalized group homology."""

__version__ = "0.1.0"
