"""Unit tests for the omlkit package."""
