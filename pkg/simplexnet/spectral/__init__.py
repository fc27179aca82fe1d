"""Hamiltonians, eigensolvers, reduced densities and entropies."""
