"""Sub-command registration."""
