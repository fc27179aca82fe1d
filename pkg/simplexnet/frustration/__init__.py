"""Classical ground manifolds of frustrated Ising lattices."""
