"""Quadratic twists of local GL2 representations and the resulting spectral multiplicities."""

__version__ = "0.1.0"
