"""Cohomology rings of flag-manifold and projective bundles, and their isomorphism types."""

__version__ = "0.1.0"
