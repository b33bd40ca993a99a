"""Numerical and exact verification of colour-flavour transformation identities."""

__version__ = "0.1.0"
