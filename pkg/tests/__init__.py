"""Test suite for QueryLens."""

