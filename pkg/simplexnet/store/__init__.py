"""Persistence of experiment runs and their results."""
