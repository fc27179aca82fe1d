"""Command-line front end for simplexnet."""
