"""Integration tests for the omlkit package."""
