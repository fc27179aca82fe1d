"""Ancillary simplex states on three and four qubits."""
