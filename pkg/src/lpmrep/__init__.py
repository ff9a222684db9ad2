"""Deterministic finite-field representations of lattice path matroids."""

__version__ = "0.1.0"
