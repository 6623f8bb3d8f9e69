"""Exact computations for skew quadrics: graphs, Clifford algebras, quivers, Hochschild cohomology."""

__version__ = "0.1.0"
