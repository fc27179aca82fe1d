"""Lattice geometries: triangular patches, the square network, regions."""
