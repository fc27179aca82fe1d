"""simplexnet - exact simplex tensor networks on frustrated lattices."""

__version__ = "0.1.0"
