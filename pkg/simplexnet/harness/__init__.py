"""Experiment runners and their reference values."""
