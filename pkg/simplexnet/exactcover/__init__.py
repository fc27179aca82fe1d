"""Exact Cover instances and model counting."""
