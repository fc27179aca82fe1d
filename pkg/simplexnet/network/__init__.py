"""Simplex tensor networks and their exact contraction."""
