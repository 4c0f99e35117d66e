"""Coskeleta, Cech nerves, hypercovers and exact-homology descent checks
over computable finite-limit categories (finite sets and finite G-sets)."""

__version__ = "0.1.0"
